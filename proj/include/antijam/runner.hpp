#pragma once

#include "antijam/sweep.hpp"

#include <filesystem>
#include <optional>

namespace antijam {

struct RunArtifacts {
    std::filesystem::path trace_csv;
    std::filesystem::path report_json;
};

// Executes one run and writes out_dir/trace.csv and out_dir/report.json. The
// report echoes the fully resolved config. Optionally dumps per-slot node
// states (AntiJam runs only) to node_state_csv. Throws ConfigError on invalid
// config or unwritable paths.
RunArtifacts run_single(const SimConfig& config, const std::filesystem::path& out_dir,
                        const std::optional<std::filesystem::path>& node_state_csv = {});

// Executes a sweep and writes out_dir/sweep.csv; returns its path.
std::filesystem::path run_sweep_to_dir(const SweepSpec& spec,
                                       const std::filesystem::path& out_dir,
                                       unsigned max_threads = 0);

} // namespace antijam
