#pragma once

#include "antijam/errors.hpp"
#include "antijam/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace antijam {

// Parameters of the multiplicative increase/decrease access-probability game.
struct ProtocolParams {
    double gamma = 0.1;                   // multiplicative step
    double p_hat = 1.0 / 24.0;            // access-probability cap
    std::optional<double> initial_p;      // defaults to p_hat
    std::optional<std::int64_t> initial_T; // defaults to 1

    // The regime with provable guarantees caps p_hat at 1/24. Larger values
    // (up to 1) are accepted but reported as outside that regime.
    bool outside_analyzed_regime() const noexcept { return p_hat > 1.0 / 24.0; }

    void validate() const {
        if (!(gamma > 0.0)) {
            throw ConfigError("gamma must be > 0");
        }
        if (!(p_hat > 0.0) || !(p_hat < 1.0)) {
            throw ConfigError("p_hat must be in (0, 1)");
        }
        if (initial_p && (!(*initial_p > 0.0) || *initial_p > p_hat)) {
            throw ConfigError("initial_p must be in (0, p_hat]");
        }
        if (initial_T && *initial_T < 1) {
            throw ConfigError("initial_T must be >= 1");
        }
    }

    bool operator==(const ProtocolParams&) const = default;
};

// State tuple piggybacked on every transmission; receivers resynchronize to it.
struct Beacon {
    double p = 0.0;
    std::int64_t c = 0;
    std::int64_t T = 0;

    bool operator==(const Beacon&) const = default;
};

// One node's protocol state. last_idle_slot is the index of the most recent
// slot this node observed as idle (-1: none yet); it answers "was there an
// idle step among the past T_v time steps". Idle outcomes are global (nobody
// transmits on an idle slot), so this history stays identical across nodes.
struct NodeState {
    double p = 0.0;
    std::int64_t counter = 1;        // c_v >= 1
    std::int64_t threshold = 1;      // T_v >= 1
    std::int64_t last_idle_slot = -1;

    bool operator==(const NodeState&) const = default;
};

inline NodeState initial_node_state(const ProtocolParams& pp) noexcept {
    NodeState s;
    s.p = pp.initial_p.value_or(pp.p_hat);
    s.counter = 1;
    s.threshold = pp.initial_T.value_or(1);
    s.last_idle_slot = -1;
    return s;
}

struct TransmitDecision {
    bool transmit = false;
    Beacon beacon; // the sender's state at the start of the slot
};

// Transmit with probability exactly p_v; consumes exactly one draw.
inline TransmitDecision decide_transmit(const NodeState& s, RngStream& rng) noexcept {
    return TransmitDecision{rng.bernoulli(s.p), Beacon{s.p, s.counter, s.threshold}};
}

// Idle channel observed: raise p (capped at p_hat), shrink the window
// threshold. T_v is floored at 1; a zero or negative threshold would make the
// counter rule fire every slot.
inline NodeState on_idle(NodeState s, const ProtocolParams& pp, std::int64_t slot) noexcept {
    s.p = std::min((1.0 + pp.gamma) * s.p, pp.p_hat);
    s.threshold = std::max<std::int64_t>(1, s.threshold - 1);
    s.last_idle_slot = slot;
    return s;
}

// Beacon received: adopt the sender's counter and threshold, and its
// probability scaled down one step.
inline NodeState on_receive(NodeState s, const Beacon& b, const ProtocolParams& pp) noexcept {
    s.p = b.p / (1.0 + pp.gamma);
    s.counter = b.c;
    s.threshold = b.T;
    return s;
}

// Runs for every node at the end of every slot, sender included. The window
// check uses the threshold value before the +2 update, both for c_v > T_v and
// for the window length. A node's own transmitting slots count as non-idle.
inline NodeState end_of_slot(NodeState s, const ProtocolParams& pp, std::int64_t slot) noexcept {
    s.counter += 1;
    if (s.counter > s.threshold) {
        s.counter = 1;
        const bool idle_in_window =
            s.last_idle_slot >= 0 && (slot - s.last_idle_slot) <= s.threshold;
        if (!idle_in_window) {
            s.p /= (1.0 + pp.gamma);
            s.threshold += 2;
        }
    }
    return s;
}

} // namespace antijam
