#include "antijam/engine.hpp"

#include "antijam/properties.hpp"
#include "antijam/trace.hpp"

#include <doctest.h>

#include <numeric>

using namespace antijam;

namespace {

SimConfig small_antijam_config() {
    SimConfig config;
    config.n = 20;
    config.steps = 5000;
    config.seed = 1234;
    config.adversary = AdversaryConfig{20, 0.5, JamStrategy::BusyDet};
    config.params = ProtocolParams{};
    return config;
}

} // namespace

TEST_CASE("single node, single slot: idle or success only") {
    SimConfig config;
    config.n = 1;
    config.steps = 1;
    config.seed = 9;
    config.adversary.strategy = JamStrategy::NoJam;
    config.params = ProtocolParams{};

    const RunTrace trace = run(config);
    REQUIRE(trace.records.size() == 1);
    const Outcome o = trace.records[0].outcome;
    CHECK((o == Outcome::Idle || o == Outcome::Success));
}

TEST_CASE("invalid configs are rejected before any slot executes") {
    SimConfig config = small_antijam_config();
    config.n = 0;
    CHECK_THROWS_AS(run(config), ConfigError);

    config = small_antijam_config();
    config.steps = 0;
    CHECK_THROWS_AS(run(config), ConfigError);

    config = small_antijam_config();
    config.adversary.epsilon = 0.0;
    CHECK_THROWS_AS(run(config), ConfigError);

    config = small_antijam_config();
    config.params = ProtocolParams{-0.1, 1.0 / 24.0, {}, {}};
    CHECK_THROWS_AS(run(config), ConfigError);

    config = small_antijam_config();
    config.params = DcfParams{16, 8};
    CHECK_THROWS_AS(run(config), ConfigError);
}

TEST_CASE("identical configs give bit-identical traces") {
    const SimConfig config = small_antijam_config();
    const RunTrace a = run(config);
    const RunTrace b = run(config);
    REQUIRE(a.records.size() == b.records.size());
    CHECK(a.records == b.records);
    CHECK(a.per_node_successes == b.per_node_successes);
    CHECK(trace_to_csv(a) == trace_to_csv(b));
}

TEST_CASE("slot records are internally consistent") {
    for (JamStrategy strategy : {JamStrategy::BusyProb, JamStrategy::BusyDet,
                                 JamStrategy::IdleDet, JamStrategy::NoJam}) {
        SimConfig config = small_antijam_config();
        config.adversary.strategy = strategy;
        const RunTrace trace = run(config);

        std::int64_t successes = 0;
        for (const SlotRecord& r : trace.records) {
            CHECK(r.outcome == resolve_slot(r.num_transmitters, r.jammed));
            CHECK(r.sender.has_value() == (r.num_transmitters == 1));
            REQUIRE(r.cumulative_p.has_value());
            CHECK(*r.cumulative_p > 0.0);
            if (r.outcome == Outcome::Success) {
                ++successes;
            }
            // Reactivity of the jamming strategies.
            if (strategy == JamStrategy::BusyDet && r.jammed) {
                CHECK(r.num_transmitters >= 1);
            }
            if (strategy == JamStrategy::IdleDet && r.jammed) {
                CHECK(r.num_transmitters == 0);
            }
            if (strategy == JamStrategy::NoJam) {
                CHECK(!r.jammed);
            }
        }
        CHECK(std::accumulate(trace.per_node_successes.begin(), trace.per_node_successes.end(),
                              std::int64_t{0}) == successes);

        const BudgetScan scan = scan_jam_budget(trace);
        CHECK(scan.exact_ok);
        CHECK(scan.wide_ok);
    }
}

TEST_CASE("observations reach exactly the listeners") {
    SimConfig config = small_antijam_config();
    config.steps = 2000;

    std::int64_t idle_slots = 0;
    std::int64_t success_slots = 0;
    run(config, [&](const SlotInspection& insp) {
        const std::size_t n = insp.pre_slot.size();
        std::vector<bool> transmitted(n, false);
        for (std::int32_t v : insp.transmitters) {
            transmitted[static_cast<std::size_t>(v)] = true;
        }
        for (std::size_t v = 0; v < n; ++v) {
            const NodeState& before = insp.pre_slot[v];
            const NodeState& after = insp.post_observe[v];
            if (transmitted[v]) {
                // Transmitters get no observation of any kind.
                CHECK(after == before);
                continue;
            }
            switch (listener_observation(insp.record.outcome)) {
            case ObservationKind::Idle:
                CHECK(after.last_idle_slot == insp.record.t);
                ++idle_slots;
                break;
            case ObservationKind::Received:
                CHECK(after.counter == insp.beacon->c);
                CHECK(after.threshold == insp.beacon->T);
                ++success_slots;
                break;
            case ObservationKind::Busy:
                CHECK(after == before);
                break;
            }
        }
    });
    CHECK(idle_slots > 0);
    CHECK(success_slots > 0);
}

TEST_CASE("protocol relations hold over a full run") {
    SimConfig config = small_antijam_config();
    config.n = 30;
    config.steps = 20000;

    ProtocolPropertyChecker checker(config.antijam_params());
    run(config, [&](const SlotInspection& insp) { checker.on_slot(insp); });

    INFO((checker.violations().empty() ? "no violations" : checker.violations().front()));
    CHECK(checker.violation_count() == 0);
    CHECK(checker.checked_fact1() > 0);
    CHECK(checker.checked_idle_growth() > 0);
    CHECK(checker.checked_busy_hold() > 0);
    CHECK(checker.checked_ratio() > 0);
}

TEST_CASE("frozen sampling never evolves state") {
    const std::vector<double> probs{0.2, 0.05, 0.4};
    const auto records = run_frozen(probs, 5000, 77);
    REQUIRE(records.size() == 5000);
    const double expected_cum = 0.2 + 0.05 + 0.4;
    for (const SlotRecord& r : records) {
        CHECK(!r.jammed);
        CHECK(*r.cumulative_p == expected_cum);
        CHECK(r.outcome == resolve_slot(r.num_transmitters, false));
    }

    CHECK_THROWS_AS(run_frozen({}, 10, 1), ConfigError);
    CHECK_THROWS_AS(run_frozen({1.5}, 10, 1), ConfigError);
}

TEST_CASE("dcf traces carry no cumulative probability") {
    SimConfig config;
    config.n = 5;
    config.steps = 500;
    config.seed = 3;
    config.adversary.strategy = JamStrategy::BusyDet;
    config.params = DcfParams{};

    const RunTrace trace = run(config);
    for (const SlotRecord& r : trace.records) {
        CHECK(!r.cumulative_p.has_value());
    }
}
