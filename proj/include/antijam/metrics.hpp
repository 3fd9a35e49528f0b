#pragma once

#include "antijam/engine.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>

namespace antijam {

struct ThroughputResult {
    double value = 0.0;
    bool all_jammed = false;     // every slot jammed; value reported as 0
    std::int64_t successes = 0;
    std::int64_t non_jammed = 0;
};

// Successful transmissions over non-jammed time steps. Throws MetricsError on
// an empty trace; an all-jammed trace yields 0 with the flag set so sweeps
// never abort.
ThroughputResult throughput(const RunTrace& trace);

// First slot index t such that cumulative_p lies in [lower, upper] for k
// consecutive slots; absent if that never happens. Throws
// UnsupportedMetricError when the trace carries no cumulative_p column.
std::optional<std::int64_t> convergence_slot(const RunTrace& trace, double lower = 0.1,
                                             double upper = 10.0, std::int64_t k = 5);
std::optional<std::int64_t> convergence_slot_from_column(std::span<const double> cumulative_p,
                                                         double lower = 0.1, double upper = 10.0,
                                                         std::int64_t k = 5);

// Fraction of slots whose cumulative probability lies in [1/(2 epsilon), 2/epsilon].
double band_fraction(const RunTrace& trace, double epsilon);
double band_fraction_from_column(std::span<const double> cumulative_p, double epsilon);

// Per-node success totals grouped into intervals [k*bin_size, (k+1)*bin_size),
// keyed by the interval's lower bound. Bin counts sum to n.
std::map<std::int64_t, std::int64_t> fairness_histogram(const RunTrace& trace,
                                                        std::int64_t bin_size = 4);

// (sum x)^2 / (n * sum x^2); 1 when all equal, and by convention 1 when all zero.
double jain_index(std::span<const std::int64_t> per_node_successes);

struct MetricsReport {
    double throughput = 0.0;
    bool all_jammed = false;
    std::int64_t non_jammed = 0;
    std::int64_t successes = 0;
    std::optional<std::int64_t> convergence_slot;            // AntiJam traces only
    std::optional<double> band_fraction;                     // AntiJam traces only
    std::optional<double> throughput_post_convergence;       // over slots after convergence
    std::map<std::int64_t, std::int64_t> fairness_histogram; // bin lower bound -> node count
    double jain_index = 1.0;

    bool operator==(const MetricsReport&) const = default;
};

// Aggregates every metric for one trace. Cumulative-probability metrics are
// null for DCF traces. The band uses the adversary epsilon echoed in the trace.
MetricsReport compute_report(const RunTrace& trace);

} // namespace antijam
