#pragma once

#include "antijam/engine.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace antijam {

// Online checker for the protocol's provable per-slot relations; attach
// on_slot as (or inside) an engine SlotInspector. Expectations are recomputed
// here from beacons and outcomes, independently of the state-transition code
// they validate.
//
// Checked per slot:
//  - after every Success, receivers hold exactly (p'/(1+gamma), c', T') and
//    the sender is untouched by the observation phase;
//  - on an Idle slot with every p_v below the cap and no window-threshold
//    firing, the cumulative probability grows by exactly (1+gamma);
//  - a Success repeating the previous sender (receivers already one step
//    below the sender) leaves the cumulative probability unchanged, as does
//    any busy slot, threshold firings aside;
//  - once any Success happened, max_v p_v / min_v p_v is 1 or (1+gamma);
//  - p_v never exceeds the cap; c_v and T_v stay >= 1.
class ProtocolPropertyChecker {
public:
    explicit ProtocolPropertyChecker(ProtocolParams params, double rel_tol = 1e-12);

    void on_slot(const SlotInspection& insp);

    const std::vector<std::string>& violations() const noexcept { return violations_; }
    std::int64_t violation_count() const noexcept { return violation_count_; }

    // Coverage counters so callers can assert the checks were not vacuous.
    std::int64_t checked_fact1() const noexcept { return checked_fact1_; }
    std::int64_t checked_idle_growth() const noexcept { return checked_idle_growth_; }
    std::int64_t checked_repeat_sender() const noexcept { return checked_repeat_sender_; }
    std::int64_t checked_busy_hold() const noexcept { return checked_busy_hold_; }
    std::int64_t checked_ratio() const noexcept { return checked_ratio_; }

private:
    void report(std::int64_t t, const std::string& what);

    ProtocolParams params_;
    double rel_tol_;
    bool seen_success_ = false;
    std::int32_t last_sender_ = -1;
    std::int64_t violation_count_ = 0;
    std::vector<std::string> violations_; // capped; count keeps going
    std::int64_t checked_fact1_ = 0;
    std::int64_t checked_idle_growth_ = 0;
    std::int64_t checked_repeat_sender_ = 0;
    std::int64_t checked_busy_hold_ = 0;
    std::int64_t checked_ratio_ = 0;
};

// Largest number of jammed slots in any window of exactly `window` consecutive
// slots (brute-force sliding scan).
std::int64_t max_jams_in_any_window(std::span<const SlotRecord> records, std::int64_t window);

struct BudgetScan {
    std::int64_t capacity = 0;       // floor((1-epsilon) * T)
    std::int64_t max_in_window = 0;  // worst exact-T window observed
    bool exact_ok = true;            // every exact-T window within capacity
    bool wide_ok = true;             // every scanned w > T window within (1-eps)(w+T)
};

// Scans a trace against its own adversary parameters: every exact-T window,
// plus wider windows (2T, 5T, 10T) against the weaker (1-eps)(w+T) bound.
BudgetScan scan_jam_budget(const RunTrace& trace);

} // namespace antijam
