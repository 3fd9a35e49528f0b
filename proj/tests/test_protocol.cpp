#include "antijam/protocol.hpp"

#include "antijam/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace antijam;

namespace {

const ProtocolParams kParams{}; // gamma = 0.1, p_hat = 1/24

NodeState make_state(double p, std::int64_t c, std::int64_t T, std::int64_t last_idle = -1) {
    return NodeState{p, c, T, last_idle};
}

} // namespace

TEST_CASE("transmit frequency matches the access probability") {
    NodeState s = initial_node_state(kParams); // p = p_hat = 1/24
    RngStream rng(7, 0);
    const int draws = 100000;
    int transmits = 0;
    for (int i = 0; i < draws; ++i) {
        transmits += decide_transmit(s, rng).transmit ? 1 : 0;
    }
    CHECK(std::fabs(static_cast<double>(transmits) / draws - 1.0 / 24.0) < 0.005);
}

TEST_CASE("beacon carries the pre-slot state unchanged") {
    const NodeState s = make_state(0.01, 5, 9);
    RngStream rng(1, 0);
    const TransmitDecision d = decide_transmit(s, rng);
    CHECK(d.beacon.p == s.p);
    CHECK(d.beacon.c == s.counter);
    CHECK(d.beacon.T == s.threshold);
}

TEST_CASE("independent streams give product joint transmit probability") {
    const double p1 = 0.3;
    const double p2 = 0.2;
    const NodeState s1 = make_state(p1, 1, 1);
    const NodeState s2 = make_state(p2, 1, 1);
    RngStream rng1(11, 0);
    RngStream rng2(11, 1);
    const int draws = 200000;
    int both = 0;
    for (int i = 0; i < draws; ++i) {
        const bool t1 = decide_transmit(s1, rng1).transmit;
        const bool t2 = decide_transmit(s2, rng2).transmit;
        both += (t1 && t2) ? 1 : 0;
    }
    const double expected = p1 * p2;
    const double sigma = std::sqrt(expected * (1.0 - expected) / draws);
    CHECK(std::fabs(static_cast<double>(both) / draws - expected) < 4.0 * sigma);
}

TEST_CASE("idle observation raises p under the cap and shrinks the window") {
    const double g1 = 1.0 + kParams.gamma;

    SUBCASE("p already at the cap stays clamped") {
        const NodeState s = on_idle(make_state(kParams.p_hat, 1, 5), kParams, 10);
        CHECK(s.p == kParams.p_hat);
        CHECK(s.threshold == 4);
        CHECK(s.last_idle_slot == 10);
    }
    SUBCASE("both clamps bind") {
        const NodeState s = on_idle(make_state(kParams.p_hat / g1, 1, 1), kParams, 0);
        CHECK(s.p == doctest::Approx(kParams.p_hat).epsilon(1e-12));
        CHECK(s.threshold == 1);
    }
    SUBCASE("exact multiplicative step") {
        const double p0 = kParams.p_hat / (g1 * g1 * g1);
        const NodeState s = on_idle(make_state(p0, 1, 3), kParams, 0);
        CHECK(s.p == doctest::Approx(kParams.p_hat / (g1 * g1)).epsilon(1e-12));
        CHECK(s.threshold == 2);
    }
}

TEST_CASE("receiving a beacon resynchronizes counter and threshold") {
    const double g1 = 1.0 + kParams.gamma;
    const Beacon b{kParams.p_hat, 7, 9};

    const NodeState r1 = on_receive(make_state(0.001, 2, 3), b, kParams);
    CHECK(r1.p == b.p / g1); // bit-level: same division
    CHECK(r1.counter == 7);
    CHECK(r1.threshold == 9);

    // Any two receivers end up identical in (c, T).
    const NodeState r2 = on_receive(make_state(0.02, 40, 11), b, kParams);
    CHECK(r1.counter == r2.counter);
    CHECK(r1.threshold == r2.threshold);
    CHECK(r1.p == r2.p);
}

TEST_CASE("end-of-slot counter and window-threshold rule") {
    const double g1 = 1.0 + kParams.gamma;

    SUBCASE("counter below threshold only increments") {
        const NodeState s = end_of_slot(make_state(0.01, 3, 5), kParams, 100);
        CHECK(s.counter == 4);
        CHECK(s.threshold == 5);
        CHECK(s.p == 0.01);
    }
    SUBCASE("no idle ever seen: probability drops, window grows") {
        const NodeState s = end_of_slot(make_state(0.01, 1, 1), kParams, 0);
        CHECK(s.counter == 1);
        CHECK(s.threshold == 3);
        CHECK(s.p == 0.01 / g1);
    }
    SUBCASE("idle inside the window suppresses the reduction") {
        // Slot t=50 was idle for this node; threshold check at t=50 after
        // on_idle shrank T to 1.
        NodeState s = make_state(0.01, 1, 2);
        s = on_idle(s, kParams, 50);
        CHECK(s.threshold == 1);
        const double p_after_idle = s.p;
        s = end_of_slot(s, kParams, 50);
        CHECK(s.counter == 1);
        CHECK(s.threshold == 1);
        CHECK(s.p == p_after_idle);
    }
    SUBCASE("idle just outside the window does not count") {
        // T = 2, last idle 3 slots ago: no idle among the past 2 steps.
        NodeState s = make_state(0.01, 2, 2, 7);
        s = end_of_slot(s, kParams, 10);
        CHECK(s.counter == 1);
        CHECK(s.threshold == 4);
        CHECK(s.p == 0.01 / g1);
    }
    SUBCASE("idle exactly at the window edge counts") {
        NodeState s = make_state(0.01, 2, 2, 8);
        s = end_of_slot(s, kParams, 10);
        CHECK(s.counter == 1);
        CHECK(s.threshold == 2);
        CHECK(s.p == 0.01);
    }
}

TEST_CASE("random op sequences preserve the state invariants") {
    RngStream rng(2024, 0);
    const double g1 = 1.0 + kParams.gamma;
    for (int trial = 0; trial < 50; ++trial) {
        NodeState s = initial_node_state(kParams);
        for (std::int64_t t = 0; t < 2000; ++t) {
            switch (rng.uniform_below(3)) {
            case 0:
                s = on_idle(s, kParams, t);
                break;
            case 1: {
                // A beacon from some peer whose p is on the same lattice.
                const std::int64_t k = static_cast<std::int64_t>(rng.uniform_below(10));
                const Beacon b{kParams.p_hat / std::pow(g1, static_cast<double>(k)),
                               1 + static_cast<std::int64_t>(rng.uniform_below(5)),
                               1 + static_cast<std::int64_t>(rng.uniform_below(9))};
                s = on_receive(s, b, kParams);
                break;
            }
            default:
                break; // busy slot: no observation
            }
            s = end_of_slot(s, kParams, t);

            REQUIRE(s.p <= kParams.p_hat);
            REQUIRE(s.p > 0.0);
            REQUIRE(s.counter >= 1);
            REQUIRE(s.threshold >= 1);
            // p stays on the lattice p_hat * (1+gamma)^-k.
            const double steps = std::log(kParams.p_hat / s.p) / std::log(g1);
            REQUIRE(std::fabs(steps - std::round(steps)) < 1e-6);
        }
    }
}
