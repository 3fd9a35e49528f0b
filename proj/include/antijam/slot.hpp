#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace antijam {

enum class Outcome : std::uint8_t { Idle, Success, Collision, Jammed };

// What a listening node perceives in one slot. Transmitters perceive nothing:
// there is no feedback channel, and their own signal occupies the medium.
enum class ObservationKind : std::uint8_t { Idle, Received, Busy };

// Ground-truth outcome of one time step.
struct SlotRecord {
    std::int64_t t = 0;
    std::int32_t num_transmitters = 0;
    std::optional<std::int32_t> sender;      // set iff num_transmitters == 1
    bool jammed = false;
    Outcome outcome = Outcome::Idle;
    std::optional<double> cumulative_p;      // sum of access probabilities at slot start; AntiJam runs only

    bool operator==(const SlotRecord&) const = default;
};

// Total classification of (num_transmitters, jammed). Jamming masks everything:
// nodes cannot tell a jammed slot from a collision.
constexpr Outcome resolve_slot(std::int64_t num_transmitters, bool jammed) noexcept {
    if (jammed) {
        return Outcome::Jammed;
    }
    if (num_transmitters == 0) {
        return Outcome::Idle;
    }
    return num_transmitters == 1 ? Outcome::Success : Outcome::Collision;
}

// Observation delivered to a node that listened this slot.
constexpr ObservationKind listener_observation(Outcome outcome) noexcept {
    switch (outcome) {
    case Outcome::Idle:
        return ObservationKind::Idle;
    case Outcome::Success:
        return ObservationKind::Received;
    case Outcome::Collision:
    case Outcome::Jammed:
    default:
        return ObservationKind::Busy;
    }
}

constexpr const char* to_string(Outcome o) noexcept {
    switch (o) {
    case Outcome::Idle:
        return "Idle";
    case Outcome::Success:
        return "Success";
    case Outcome::Collision:
        return "Collision";
    case Outcome::Jammed:
    default:
        return "Jammed";
    }
}

constexpr std::optional<Outcome> outcome_from_string(std::string_view s) noexcept {
    if (s == "Idle") return Outcome::Idle;
    if (s == "Success") return Outcome::Success;
    if (s == "Collision") return Outcome::Collision;
    if (s == "Jammed") return Outcome::Jammed;
    return std::nullopt;
}

} // namespace antijam
