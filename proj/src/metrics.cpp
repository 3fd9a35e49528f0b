#include "antijam/metrics.hpp"

#include "antijam/errors.hpp"

#include <vector>

namespace antijam {

namespace {

std::vector<double> cumulative_p_column(const RunTrace& trace) {
    std::vector<double> column;
    column.reserve(trace.records.size());
    for (const SlotRecord& r : trace.records) {
        if (!r.cumulative_p) {
            throw UnsupportedMetricError(
                "trace carries no cumulative_p column (DCF run?); "
                "cumulative-probability metrics need an AntiJam trace");
        }
        column.push_back(*r.cumulative_p);
    }
    if (column.empty()) {
        throw MetricsError("empty trace");
    }
    return column;
}

} // namespace

ThroughputResult throughput(const RunTrace& trace) {
    if (trace.records.empty()) {
        throw MetricsError("throughput of an empty trace is undefined");
    }
    ThroughputResult r;
    for (const SlotRecord& rec : trace.records) {
        if (rec.outcome == Outcome::Success) {
            ++r.successes;
        }
        if (rec.outcome != Outcome::Jammed) {
            ++r.non_jammed;
        }
    }
    if (r.non_jammed == 0) {
        r.all_jammed = true;
        r.value = 0.0;
    } else {
        r.value = static_cast<double>(r.successes) / static_cast<double>(r.non_jammed);
    }
    return r;
}

std::optional<std::int64_t> convergence_slot_from_column(std::span<const double> cumulative_p,
                                                         double lower, double upper,
                                                         std::int64_t k) {
    if (k < 1) {
        throw MetricsError("convergence window k must be >= 1");
    }
    std::int64_t streak = 0;
    for (std::size_t i = 0; i < cumulative_p.size(); ++i) {
        if (cumulative_p[i] >= lower && cumulative_p[i] <= upper) {
            ++streak;
            if (streak >= k) {
                return static_cast<std::int64_t>(i) - (k - 1);
            }
        } else {
            streak = 0;
        }
    }
    return std::nullopt;
}

std::optional<std::int64_t> convergence_slot(const RunTrace& trace, double lower, double upper,
                                             std::int64_t k) {
    const auto column = cumulative_p_column(trace);
    return convergence_slot_from_column(column, lower, upper, k);
}

double band_fraction_from_column(std::span<const double> cumulative_p, double epsilon) {
    if (cumulative_p.empty()) {
        throw MetricsError("empty trace");
    }
    const double lo = 1.0 / (2.0 * epsilon);
    const double hi = 2.0 / epsilon;
    std::int64_t in_band = 0;
    for (double p : cumulative_p) {
        if (p >= lo && p <= hi) {
            ++in_band;
        }
    }
    return static_cast<double>(in_band) / static_cast<double>(cumulative_p.size());
}

double band_fraction(const RunTrace& trace, double epsilon) {
    const auto column = cumulative_p_column(trace);
    return band_fraction_from_column(column, epsilon);
}

std::map<std::int64_t, std::int64_t> fairness_histogram(const RunTrace& trace,
                                                        std::int64_t bin_size) {
    if (bin_size < 1) {
        throw MetricsError("histogram bin_size must be >= 1");
    }
    std::map<std::int64_t, std::int64_t> bins;
    for (std::int64_t successes : trace.per_node_successes) {
        ++bins[(successes / bin_size) * bin_size];
    }
    return bins;
}

double jain_index(std::span<const std::int64_t> per_node_successes) {
    if (per_node_successes.empty()) {
        throw MetricsError("jain_index needs at least one node");
    }
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::int64_t x : per_node_successes) {
        const auto v = static_cast<double>(x);
        sum += v;
        sum_sq += v * v;
    }
    if (sum_sq == 0.0) {
        return 1.0; // all zero: perfectly (if vacuously) fair
    }
    return (sum * sum) / (static_cast<double>(per_node_successes.size()) * sum_sq);
}

MetricsReport compute_report(const RunTrace& trace) {
    MetricsReport report;
    const ThroughputResult tp = throughput(trace);
    report.throughput = tp.value;
    report.all_jammed = tp.all_jammed;
    report.successes = tp.successes;
    report.non_jammed = tp.non_jammed;

    if (trace.config_echo.protocol() == Protocol::AntiJam) {
        report.convergence_slot = convergence_slot(trace);
        report.band_fraction = band_fraction(trace, trace.config_echo.adversary.epsilon);
        if (report.convergence_slot) {
            std::int64_t successes = 0;
            std::int64_t non_jammed = 0;
            for (std::size_t i = static_cast<std::size_t>(*report.convergence_slot);
                 i < trace.records.size(); ++i) {
                if (trace.records[i].outcome == Outcome::Success) {
                    ++successes;
                }
                if (trace.records[i].outcome != Outcome::Jammed) {
                    ++non_jammed;
                }
            }
            if (non_jammed > 0) {
                report.throughput_post_convergence =
                    static_cast<double>(successes) / static_cast<double>(non_jammed);
            }
        }
    }

    report.fairness_histogram = fairness_histogram(trace);
    report.jain_index = jain_index(trace.per_node_successes);
    return report;
}

} // namespace antijam
