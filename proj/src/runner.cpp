#include "antijam/runner.hpp"

#include "antijam/config.hpp"
#include "antijam/trace.hpp"

#include <fstream>

namespace antijam {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot write to '" + path.string() + "'");
    }
    return out;
}

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw ConfigError("cannot create output directory '" + dir.string() + "'");
    }
}

} // namespace

RunArtifacts run_single(const SimConfig& config, const std::filesystem::path& out_dir,
                        const std::optional<std::filesystem::path>& node_state_csv) {
    config.validate();
    ensure_dir(out_dir);

    std::ofstream state_out;
    SlotInspector inspector;
    if (node_state_csv) {
        if (config.protocol() != Protocol::AntiJam) {
            throw ConfigError("node-state export is only available for antijam runs");
        }
        state_out = open_for_write(*node_state_csv);
        write_node_state_csv_header(state_out);
        inspector = [&state_out](const SlotInspection& insp) {
            write_node_state_csv_rows(insp.record.t, insp.post_slot, state_out);
        };
    }

    const RunTrace trace = run(config, inspector);
    const MetricsReport report = compute_report(trace);

    RunArtifacts artifacts;
    artifacts.trace_csv = out_dir / "trace.csv";
    artifacts.report_json = out_dir / "report.json";

    {
        auto out = open_for_write(artifacts.trace_csv);
        write_trace_csv(trace, out);
    }
    {
        auto out = open_for_write(artifacts.report_json);
        out << report_to_json(report, config).dump(2) << '\n';
    }
    return artifacts;
}

std::filesystem::path run_sweep_to_dir(const SweepSpec& spec,
                                       const std::filesystem::path& out_dir,
                                       unsigned max_threads) {
    spec.validate();
    ensure_dir(out_dir);
    const auto rows = run_sweep(spec, max_threads);
    const std::filesystem::path csv_path = out_dir / "sweep.csv";
    auto out = open_for_write(csv_path);
    write_sweep_csv(spec, rows, out);
    return csv_path;
}

} // namespace antijam
