#pragma once

#include "antijam/adversary.hpp"
#include "antijam/dcf.hpp"
#include "antijam/protocol.hpp"
#include "antijam/slot.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <variant>
#include <vector>

namespace antijam {

enum class Protocol : std::uint8_t { AntiJam, Dcf };

// Stream ids: node v draws from stream v; the adversary from its own stream.
// Adding nodes never perturbs another entity's draws.
inline constexpr std::uint64_t kAdversaryStreamId = std::numeric_limits<std::uint64_t>::max();

struct SimConfig {
    std::int64_t n = 1000;
    std::int64_t steps = 100000;
    std::uint64_t seed = 1;
    AdversaryConfig adversary{};
    std::variant<ProtocolParams, DcfParams> params = ProtocolParams{};

    Protocol protocol() const noexcept {
        return std::holds_alternative<ProtocolParams>(params) ? Protocol::AntiJam : Protocol::Dcf;
    }
    const ProtocolParams& antijam_params() const { return std::get<ProtocolParams>(params); }
    const DcfParams& dcf_params() const { return std::get<DcfParams>(params); }

    void validate() const; // throws ConfigError before any slot executes

    bool operator==(const SimConfig&) const = default;
};

struct RunTrace {
    std::vector<SlotRecord> records;
    std::vector<std::int64_t> per_node_successes; // indexed by node id
    SimConfig config_echo;
};

// Per-slot view handed to an optional inspector, for property checks and
// node-state dumps. The node-state spans are populated for AntiJam runs only
// (empty for DCF): pre_slot is the state at the start of the slot,
// post_observe the state after idle/receive updates, post_slot the state
// after the end-of-slot counter logic.
struct SlotInspection {
    const SlotRecord& record;
    std::span<const NodeState> pre_slot;
    std::span<const NodeState> post_observe;
    std::span<const NodeState> post_slot;
    std::span<const std::int32_t> transmitters;
    const Beacon* beacon = nullptr; // non-null iff outcome == Success on an AntiJam run
};

using SlotInspector = std::function<void(const SlotInspection&)>;

// Runs the synchronized slot loop: collect transmit decisions, let the
// adversary react to the pre-jam channel, resolve the outcome, deliver
// observations, apply end-of-slot logic, record the slot. Strictly
// single-threaded and deterministic in the config.
RunTrace run(const SimConfig& config, const SlotInspector& inspector = {});

// Frozen-state sampling: repeatedly draws transmit decisions at a fixed
// probability vector with no state evolution and no jamming. Used to compare
// empirical idle/success rates against their closed forms.
std::vector<SlotRecord> run_frozen(const std::vector<double>& probs, std::int64_t steps,
                                   std::uint64_t seed);

} // namespace antijam
