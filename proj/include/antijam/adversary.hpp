#pragma once

#include "antijam/errors.hpp"
#include "antijam/rng.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace antijam {

enum class JamStrategy : std::uint8_t { BusyProb, BusyDet, IdleDet, NoJam };

struct AdversaryConfig {
    std::int64_t window = 100;  // T
    double epsilon = 0.5;       // adversary may jam at most a (1-epsilon) fraction
    JamStrategy strategy = JamStrategy::BusyDet;

    void validate() const {
        if (window < 1) {
            throw ConfigError("adversary window T must be >= 1");
        }
        if (!(epsilon > 0.0) || epsilon > 1.0) {
            throw ConfigError("epsilon must be in (0, 1]");
        }
    }

    bool operator==(const AdversaryConfig&) const = default;
};

// What the jammer senses before committing: carrier activity only, not the
// transmitter count or identities.
struct PreSlotView {
    bool active = false; // at least one node transmits this slot
};

// Sliding-window jam accounting: at most floor((1-epsilon)*T) jams in every
// window of exactly T consecutive slots. Enforcing the bound per exact-T
// window also bounds any window of w >= T slots by (1-epsilon)*(w+T).
class AdversaryBudget {
public:
    AdversaryBudget(std::int64_t window, double epsilon)
        : flags_(static_cast<std::size_t>(window), 0),
          capacity_(jam_capacity(window, epsilon)) {}

    static std::int64_t jam_capacity(std::int64_t window, double epsilon) noexcept {
        // The +1e-9 absorbs representation error in (1-epsilon)*T (e.g.
        // 0.7*100 evaluating just below 70).
        return static_cast<std::int64_t>(
            std::floor((1.0 - epsilon) * static_cast<double>(window) + 1e-9));
    }

    std::int64_t window() const noexcept { return static_cast<std::int64_t>(flags_.size()); }
    std::int64_t capacity() const noexcept { return capacity_; }
    std::int64_t jam_count() const noexcept { return jam_count_; }

    // One more jam would still keep every T-window within capacity.
    bool allows() const noexcept { return jam_count_ < capacity_; }

    // Evict the oldest flag, append the newest.
    void record_and_slide(bool jam) noexcept {
        jam_count_ -= flags_[head_];
        flags_[head_] = jam ? 1 : 0;
        jam_count_ += flags_[head_];
        head_ = (head_ + 1) % flags_.size();
    }

private:
    std::vector<std::uint8_t> flags_; // ring buffer, all-false at start (full budget)
    std::size_t head_ = 0;
    std::int64_t jam_count_ = 0;
    std::int64_t capacity_ = 0;
};

// Reactive jamming decision for the current slot. All strategies, including
// the probabilistic one, respect the (T, 1-epsilon) budget.
inline bool decide(JamStrategy strategy, PreSlotView view, const AdversaryBudget& budget,
                   double epsilon, RngStream& rng) noexcept {
    switch (strategy) {
    case JamStrategy::NoJam:
        return false;
    case JamStrategy::BusyDet:
        return view.active && budget.allows();
    case JamStrategy::IdleDet:
        return !view.active && budget.allows();
    case JamStrategy::BusyProb:
    default:
        return view.active && budget.allows() && rng.bernoulli(1.0 - epsilon);
    }
}

} // namespace antijam
