#include "antijam/sweep.hpp"

#include "antijam/config.hpp"
#include "antijam/trace.hpp"

#include <atomic>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>

namespace antijam {

std::string to_string(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::N:
        return "n";
    case SweepAxis::Epsilon:
        return "epsilon";
    case SweepAxis::Gamma:
        return "gamma";
    case SweepAxis::PHat:
        return "p_hat";
    case SweepAxis::Strategy:
    default:
        return "strategy";
    }
}

SweepAxis axis_from_string(std::string_view s) {
    if (s == "n") return SweepAxis::N;
    if (s == "epsilon") return SweepAxis::Epsilon;
    if (s == "gamma") return SweepAxis::Gamma;
    if (s == "p_hat") return SweepAxis::PHat;
    if (s == "strategy") return SweepAxis::Strategy;
    throw ConfigError("unknown sweep axis '" + std::string(s) +
                      "' (expected n|epsilon|gamma|p_hat|strategy)");
}

void SweepSpec::validate() const {
    base.validate();
    if (values.empty()) {
        throw ConfigError("sweep needs at least one axis value");
    }
    if (repetitions < 1) {
        throw ConfigError("sweep repetitions must be >= 1");
    }
    for (const std::string& value : values) {
        apply_axis_value(base, axis, value).validate();
    }
}

namespace {

double parse_double(const std::string& value, const char* what) {
    char* end = nullptr;
    const double parsed = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0') {
        throw ConfigError(std::string("sweep value '") + value + "' is not a valid " + what);
    }
    return parsed;
}

std::int64_t parse_int(const std::string& value, const char* what) {
    char* end = nullptr;
    const std::int64_t parsed = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0') {
        throw ConfigError(std::string("sweep value '") + value + "' is not a valid " + what);
    }
    return parsed;
}

} // namespace

SimConfig apply_axis_value(const SimConfig& base, SweepAxis axis, const std::string& value) {
    SimConfig config = base;
    switch (axis) {
    case SweepAxis::N:
        config.n = parse_int(value, "node count");
        break;
    case SweepAxis::Epsilon:
        config.adversary.epsilon = parse_double(value, "epsilon");
        break;
    case SweepAxis::Gamma: {
        if (config.protocol() != Protocol::AntiJam) {
            throw ConfigError("gamma sweep requires the antijam protocol");
        }
        auto pp = config.antijam_params();
        pp.gamma = parse_double(value, "gamma");
        config.params = pp;
        break;
    }
    case SweepAxis::PHat: {
        if (config.protocol() != Protocol::AntiJam) {
            throw ConfigError("p_hat sweep requires the antijam protocol");
        }
        auto pp = config.antijam_params();
        pp.p_hat = parse_double(value, "p_hat");
        config.params = pp;
        break;
    }
    case SweepAxis::Strategy:
        config.adversary.strategy = strategy_from_string(value);
        break;
    }
    return config;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned max_threads,
                                const std::function<void(const RunTrace&)>& trace_observer) {
    spec.validate();

    struct RowTask {
        SimConfig config;
        std::int64_t value_index;
        std::int64_t rep;
    };
    std::vector<RowTask> tasks;
    tasks.reserve(spec.values.size() * static_cast<std::size_t>(spec.repetitions));
    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
        const SimConfig with_value = apply_axis_value(spec.base, spec.axis, spec.values[vi]);
        for (std::int64_t rep = 0; rep < spec.repetitions; ++rep) {
            SimConfig config = with_value;
            config.seed = derive_seed(spec.seed_base, static_cast<std::uint64_t>(vi),
                                      static_cast<std::uint64_t>(rep));
            tasks.push_back(RowTask{config, static_cast<std::int64_t>(vi), rep});
        }
    }

    std::vector<SweepRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) {
                return;
            }
            const RowTask& task = tasks[i];
            const RunTrace trace = run(task.config);
            if (trace_observer) {
                trace_observer(trace);
            }
            rows[i] = SweepRow{task.value_index,
                               spec.values[static_cast<std::size_t>(task.value_index)], task.rep,
                               task.config.seed, compute_report(trace)};
        }
    };

    unsigned workers = max_threads != 0 ? max_threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) {
            pool.emplace_back(worker);
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }
    return rows;
}

void write_sweep_csv(const SweepSpec& spec, std::span<const SweepRow> rows, std::ostream& out) {
    out << "axis,value,rep,seed,throughput,all_jammed,non_jammed,successes,convergence_slot,"
           "band_fraction,throughput_post_convergence,jain_index\n";
    const std::string axis = to_string(spec.axis);
    for (const SweepRow& row : rows) {
        out << axis << ',' << row.value << ',' << row.rep << ',' << row.seed << ','
            << format_real(row.report.throughput) << ',' << (row.report.all_jammed ? 1 : 0) << ','
            << row.report.non_jammed << ',' << row.report.successes << ',';
        if (row.report.convergence_slot) {
            out << *row.report.convergence_slot;
        }
        out << ',';
        if (row.report.band_fraction) {
            out << format_real(*row.report.band_fraction);
        }
        out << ',';
        if (row.report.throughput_post_convergence) {
            out << format_real(*row.report.throughput_post_convergence);
        }
        out << ',' << format_real(row.report.jain_index) << '\n';
    }
}

std::string sweep_to_csv(const SweepSpec& spec, std::span<const SweepRow> rows) {
    std::ostringstream out;
    write_sweep_csv(spec, rows, out);
    return out.str();
}

} // namespace antijam
