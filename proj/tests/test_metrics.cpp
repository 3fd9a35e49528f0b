#include "antijam/metrics.hpp"

#include "antijam/errors.hpp"
#include "antijam/trace.hpp"

#include <doctest.h>

#include <sstream>

using namespace antijam;

namespace {

SlotRecord make_record(std::int64_t t, Outcome outcome, std::optional<double> cumulative_p) {
    SlotRecord r;
    r.t = t;
    r.outcome = outcome;
    r.jammed = outcome == Outcome::Jammed;
    switch (outcome) {
    case Outcome::Idle:
        r.num_transmitters = 0;
        break;
    case Outcome::Success:
        r.num_transmitters = 1;
        r.sender = 0;
        break;
    default:
        r.num_transmitters = 2;
        break;
    }
    r.cumulative_p = cumulative_p;
    return r;
}

RunTrace trace_from_outcomes(const std::vector<Outcome>& outcomes, bool with_cumulative = true) {
    RunTrace trace;
    trace.config_echo = SimConfig{};
    trace.per_node_successes.assign(1, 0);
    for (std::size_t t = 0; t < outcomes.size(); ++t) {
        trace.records.push_back(make_record(static_cast<std::int64_t>(t), outcomes[t],
                                            with_cumulative ? std::optional<double>(1.0)
                                                            : std::nullopt));
        if (outcomes[t] == Outcome::Success) {
            ++trace.per_node_successes[0];
        }
    }
    return trace;
}

RunTrace trace_from_cumulative(const std::vector<double>& cumulative) {
    RunTrace trace;
    trace.config_echo = SimConfig{};
    trace.per_node_successes.assign(1, 0);
    for (std::size_t t = 0; t < cumulative.size(); ++t) {
        trace.records.push_back(
            make_record(static_cast<std::int64_t>(t), Outcome::Idle, cumulative[t]));
    }
    return trace;
}

} // namespace

TEST_CASE("throughput is successes over non-jammed slots") {
    std::vector<Outcome> outcomes(30, Outcome::Success);
    outcomes.insert(outcomes.end(), 40, Outcome::Idle);
    outcomes.insert(outcomes.end(), 30, Outcome::Collision);
    const ThroughputResult r = throughput(trace_from_outcomes(outcomes));
    CHECK(r.value == 0.30);
    CHECK(!r.all_jammed);
    CHECK(r.successes == 30);
    CHECK(r.non_jammed == 100);
    // Exact identity: the reported value is the literal quotient of the counts.
    CHECK(r.value == static_cast<double>(r.successes) / static_cast<double>(r.non_jammed));
}

TEST_CASE("jammed slots shrink the denominator") {
    std::vector<Outcome> outcomes(10, Outcome::Success);
    outcomes.insert(outcomes.end(), 10, Outcome::Idle);
    outcomes.insert(outcomes.end(), 80, Outcome::Jammed);
    CHECK(throughput(trace_from_outcomes(outcomes)).value == 0.5);
}

TEST_CASE("an all-jammed trace reports zero with the flag instead of failing") {
    const ThroughputResult r =
        throughput(trace_from_outcomes(std::vector<Outcome>(50, Outcome::Jammed)));
    CHECK(r.value == 0.0);
    CHECK(r.all_jammed);
}

TEST_CASE("throughput of an empty trace is an error") {
    CHECK_THROWS_AS(throughput(RunTrace{{}, {}, SimConfig{}}), MetricsError);
}

TEST_CASE("convergence slot finds the first in-band window") {
    SUBCASE("constant in band from the start") {
        const auto trace = trace_from_cumulative(std::vector<double>(10, 1.0));
        CHECK(convergence_slot(trace) == 0);
    }
    SUBCASE("band entered at slot 2") {
        std::vector<double> cumulative{20, 20, 5, 5, 5, 5, 5, 5, 5, 5};
        CHECK(convergence_slot(trace_from_cumulative(cumulative)) == 2);
    }
    SUBCASE("brief dips reset the window") {
        std::vector<double> cumulative{5, 5, 50, 5, 5, 5, 5, 5};
        CHECK(convergence_slot(trace_from_cumulative(cumulative), 0.1, 10.0, 5) == 3);
    }
    SUBCASE("never converges") {
        const auto trace = trace_from_cumulative(std::vector<double>(10, 99.0));
        CHECK(!convergence_slot(trace).has_value());
    }
    SUBCASE("dcf traces are unsupported") {
        SimConfig dcf_config;
        dcf_config.params = DcfParams{};
        RunTrace trace = trace_from_outcomes({Outcome::Idle, Outcome::Idle}, false);
        trace.config_echo = dcf_config;
        CHECK_THROWS_AS(convergence_slot(trace), UnsupportedMetricError);
        CHECK_THROWS_AS(band_fraction(trace, 0.5), UnsupportedMetricError);
    }
}

TEST_CASE("band fraction counts slots inside [1/(2e), 2/e]") {
    const double epsilon = 0.5;
    CHECK(band_fraction(trace_from_cumulative(std::vector<double>(8, 1.0 / epsilon)), epsilon) ==
          1.0);
    CHECK(band_fraction(trace_from_cumulative(std::vector<double>(8, 10.0 / epsilon)), epsilon) ==
          0.0);
    // Boundaries are inclusive.
    CHECK(band_fraction(trace_from_cumulative({1.0, 4.0, 5.0, 0.9}), epsilon) == 0.5);
}

TEST_CASE("fairness histogram bins per-node success totals") {
    RunTrace trace;
    trace.config_echo = SimConfig{};
    trace.per_node_successes = {3, 5, 9};

    SUBCASE("bin size 4") {
        const auto bins = fairness_histogram(trace, 4);
        REQUIRE(bins.size() == 3);
        CHECK(bins.at(0) == 1);
        CHECK(bins.at(4) == 1);
        CHECK(bins.at(8) == 1);
    }
    SUBCASE("equal counts collapse to one bin") {
        trace.per_node_successes = {6, 6, 6, 6};
        const auto bins = fairness_histogram(trace, 4);
        REQUIRE(bins.size() == 1);
        CHECK(bins.at(4) == 4);
    }
    SUBCASE("bin totals sum to n") {
        trace.per_node_successes = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
        std::int64_t total = 0;
        for (const auto& [bin, count] : fairness_histogram(trace, 4)) {
            total += count;
        }
        CHECK(total == 12);
    }
}

TEST_CASE("jain index") {
    CHECK(jain_index(std::vector<std::int64_t>{5, 5, 5, 5}) == 1.0);
    CHECK(jain_index(std::vector<std::int64_t>{10, 0, 0, 0}) == 0.25);
    // (3+5+9)^2 / (3 * (9+25+81)) = 289/345
    CHECK(jain_index(std::vector<std::int64_t>{3, 5, 9}) ==
          doctest::Approx(289.0 / 345.0).epsilon(1e-12));
    CHECK(jain_index(std::vector<std::int64_t>{0, 0}) == 1.0);

    // Range property over arbitrary vectors.
    for (const auto& v : {std::vector<std::int64_t>{1}, std::vector<std::int64_t>{7, 1, 0},
                          std::vector<std::int64_t>{100, 1, 1, 1, 1}}) {
        const double j = jain_index(v);
        CHECK(j > 0.0);
        CHECK(j <= 1.0);
    }
}

TEST_CASE("band and convergence are recomputable from the exported CSV") {
    SimConfig config;
    config.n = 10;
    config.steps = 3000;
    config.seed = 55;
    config.adversary = AdversaryConfig{50, 0.5, JamStrategy::BusyDet};
    config.params = ProtocolParams{};
    const RunTrace trace = run(config);

    std::stringstream csv;
    write_trace_csv(trace, csv);
    const auto parsed = parse_trace_csv(csv);
    REQUIRE(parsed.size() == trace.records.size());

    std::vector<double> column;
    for (const SlotRecord& r : parsed) {
        REQUIRE(r.cumulative_p.has_value());
        column.push_back(*r.cumulative_p);
    }
    CHECK(convergence_slot_from_column(column) == convergence_slot(trace));
    CHECK(band_fraction_from_column(column, 0.5) == band_fraction(trace, 0.5));

    // %.17g output round-trips doubles exactly.
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i] == trace.records[i]);
    }
}
