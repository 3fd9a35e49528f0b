#pragma once

#include "antijam/engine.hpp"
#include "antijam/metrics.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace antijam {

enum class SweepAxis : std::uint8_t { N, Epsilon, Gamma, PHat, Strategy };

std::string to_string(SweepAxis axis);
SweepAxis axis_from_string(std::string_view s); // throws ConfigError

struct SweepSpec {
    SimConfig base;
    SweepAxis axis = SweepAxis::N;
    std::vector<std::string> values; // parsed per axis when applied
    std::int64_t repetitions = 10;
    std::uint64_t seed_base = 1;

    void validate() const; // throws ConfigError
};

// Materializes the config for one axis value. Throws ConfigError when the
// value does not parse or does not apply (e.g. gamma on a DCF base).
SimConfig apply_axis_value(const SimConfig& base, SweepAxis axis, const std::string& value);

struct SweepRow {
    std::int64_t value_index = 0;
    std::string value;
    std::int64_t rep = 0;
    std::uint64_t seed = 0;
    MetricsReport report;
};

// Runs one row per (value, repetition) with a distinct derived seed each, in
// parallel up to max_threads workers. Row order is (value index, repetition)
// regardless of completion order. The optional observer sees every finished
// trace (called from worker threads; it must be thread-safe).
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned max_threads = 0,
                                const std::function<void(const RunTrace&)>& trace_observer = {});

// One CSV row per sweep row with all scalar report fields; optionals empty
// when absent. Pure function of the rows.
void write_sweep_csv(const SweepSpec& spec, std::span<const SweepRow> rows, std::ostream& out);
std::string sweep_to_csv(const SweepSpec& spec, std::span<const SweepRow> rows);

} // namespace antijam
