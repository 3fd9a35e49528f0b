#include "antijam/engine.hpp"

#include <optional>

namespace antijam {

void SimConfig::validate() const {
    if (n < 1) {
        throw ConfigError("n must be >= 1");
    }
    if (steps < 1) {
        throw ConfigError("steps must be >= 1");
    }
    adversary.validate();
    if (protocol() == Protocol::AntiJam) {
        antijam_params().validate();
    } else {
        dcf_params().validate();
    }
}

namespace {

RunTrace run_antijam(const SimConfig& cfg, const SlotInspector& inspector) {
    const ProtocolParams& pp = cfg.antijam_params();
    const std::size_t n = static_cast<std::size_t>(cfg.n);

    std::vector<NodeState> states(n, initial_node_state(pp));
    std::vector<RngStream> rngs;
    rngs.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        rngs.emplace_back(cfg.seed, static_cast<std::uint64_t>(v));
    }
    RngStream adversary_rng(cfg.seed, kAdversaryStreamId);
    AdversaryBudget budget(cfg.adversary.window, cfg.adversary.epsilon);

    RunTrace trace;
    trace.config_echo = cfg;
    trace.records.reserve(static_cast<std::size_t>(cfg.steps));
    trace.per_node_successes.assign(n, 0);

    std::vector<std::int32_t> transmitters;
    transmitters.reserve(64);
    std::vector<NodeState> pre_buf;
    std::vector<NodeState> observe_buf;

    for (std::int64_t t = 0; t < cfg.steps; ++t) {
        double cumulative_p = 0.0;
        for (const NodeState& s : states) {
            cumulative_p += s.p;
        }

        transmitters.clear();
        Beacon beacon;
        for (std::size_t v = 0; v < n; ++v) {
            const TransmitDecision d = decide_transmit(states[v], rngs[v]);
            if (d.transmit) {
                transmitters.push_back(static_cast<std::int32_t>(v));
                beacon = d.beacon;
            }
        }
        const auto num_tx = static_cast<std::int32_t>(transmitters.size());

        // The jammer reacts after it knows whether anyone transmits.
        const bool jam = decide(cfg.adversary.strategy, PreSlotView{num_tx > 0}, budget,
                                cfg.adversary.epsilon, adversary_rng);
        budget.record_and_slide(jam);
        const Outcome outcome = resolve_slot(num_tx, jam);

        std::optional<std::int32_t> sender;
        if (num_tx == 1) {
            sender = transmitters[0];
        }

        if (inspector) {
            pre_buf = states;
        }

        if (outcome == Outcome::Idle) {
            // Nobody transmitted, so every node listened and senses idle.
            for (std::size_t v = 0; v < n; ++v) {
                states[v] = on_idle(states[v], pp, t);
            }
        } else if (outcome == Outcome::Success) {
            // The beacon reaches every listener; the sender gets no feedback.
            const auto u = static_cast<std::size_t>(*sender);
            for (std::size_t v = 0; v < n; ++v) {
                if (v != u) {
                    states[v] = on_receive(states[v], beacon, pp);
                }
            }
        }
        // Collision and Jammed read as a busy channel: no observation update.

        if (inspector) {
            observe_buf = states;
        }

        for (std::size_t v = 0; v < n; ++v) {
            states[v] = end_of_slot(states[v], pp, t);
        }

        if (outcome == Outcome::Success) {
            ++trace.per_node_successes[static_cast<std::size_t>(*sender)];
        }
        trace.records.push_back(SlotRecord{t, num_tx, sender, jam, outcome, cumulative_p});

        if (inspector) {
            inspector(SlotInspection{trace.records.back(), pre_buf, observe_buf, states,
                                     transmitters,
                                     outcome == Outcome::Success ? &beacon : nullptr});
        }
    }
    return trace;
}

RunTrace run_dcf(const SimConfig& cfg, const SlotInspector& inspector) {
    const DcfParams& params = cfg.dcf_params();
    const std::size_t n = static_cast<std::size_t>(cfg.n);

    std::vector<RngStream> rngs;
    rngs.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        rngs.emplace_back(cfg.seed, static_cast<std::uint64_t>(v));
    }
    std::vector<DcfNodeState> states;
    states.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        states.push_back(dcf_initial(params, rngs[v]));
    }
    RngStream adversary_rng(cfg.seed, kAdversaryStreamId);
    AdversaryBudget budget(cfg.adversary.window, cfg.adversary.epsilon);

    RunTrace trace;
    trace.config_echo = cfg;
    trace.records.reserve(static_cast<std::size_t>(cfg.steps));
    trace.per_node_successes.assign(n, 0);

    std::vector<std::int32_t> transmitters;
    transmitters.reserve(64);

    for (std::int64_t t = 0; t < cfg.steps; ++t) {
        transmitters.clear();
        for (std::size_t v = 0; v < n; ++v) {
            if (dcf_decide(states[v])) {
                transmitters.push_back(static_cast<std::int32_t>(v));
            }
        }
        const auto num_tx = static_cast<std::int32_t>(transmitters.size());

        const bool jam = decide(cfg.adversary.strategy, PreSlotView{num_tx > 0}, budget,
                                cfg.adversary.epsilon, adversary_rng);
        budget.record_and_slide(jam);
        const Outcome outcome = resolve_slot(num_tx, jam);

        std::optional<std::int32_t> sender;
        if (num_tx == 1) {
            sender = transmitters[0];
        }

        for (std::size_t v = 0; v < n; ++v) {
            DcfSlotEvent ev;
            if (states[v].backoff == 0) {
                // This node transmitted; ground-truth delivery feedback acts
                // as an abstract immediate ACK.
                ev = outcome == Outcome::Success ? DcfSlotEvent::MySuccess
                                                 : DcfSlotEvent::MyFailure;
            } else {
                ev = outcome == Outcome::Idle ? DcfSlotEvent::IdleObserved
                                              : DcfSlotEvent::BusyObserved;
            }
            states[v] = dcf_update(states[v], params, ev, rngs[v]);
        }

        if (outcome == Outcome::Success) {
            ++trace.per_node_successes[static_cast<std::size_t>(*sender)];
        }
        trace.records.push_back(SlotRecord{t, num_tx, sender, jam, outcome, std::nullopt});

        if (inspector) {
            inspector(SlotInspection{trace.records.back(), {}, {}, {}, transmitters, nullptr});
        }
    }
    return trace;
}

} // namespace

RunTrace run(const SimConfig& config, const SlotInspector& inspector) {
    config.validate();
    return config.protocol() == Protocol::AntiJam ? run_antijam(config, inspector)
                                                  : run_dcf(config, inspector);
}

std::vector<SlotRecord> run_frozen(const std::vector<double>& probs, std::int64_t steps,
                                   std::uint64_t seed) {
    if (probs.empty()) {
        throw ConfigError("frozen run needs at least one probability");
    }
    if (steps < 1) {
        throw ConfigError("steps must be >= 1");
    }
    for (double p : probs) {
        if (!(p >= 0.0) || !(p < 1.0)) {
            throw ConfigError("frozen probabilities must lie in [0, 1)");
        }
    }

    std::vector<RngStream> rngs;
    rngs.reserve(probs.size());
    for (std::size_t v = 0; v < probs.size(); ++v) {
        rngs.emplace_back(seed, static_cast<std::uint64_t>(v));
    }

    double cumulative_p = 0.0;
    for (double p : probs) {
        cumulative_p += p;
    }

    std::vector<SlotRecord> records;
    records.reserve(static_cast<std::size_t>(steps));
    for (std::int64_t t = 0; t < steps; ++t) {
        std::int32_t num_tx = 0;
        std::int32_t last_tx = -1;
        for (std::size_t v = 0; v < probs.size(); ++v) {
            if (rngs[v].bernoulli(probs[v])) {
                ++num_tx;
                last_tx = static_cast<std::int32_t>(v);
            }
        }
        std::optional<std::int32_t> sender;
        if (num_tx == 1) {
            sender = last_tx;
        }
        records.push_back(
            SlotRecord{t, num_tx, sender, false, resolve_slot(num_tx, false), cumulative_p});
    }
    return records;
}

} // namespace antijam
