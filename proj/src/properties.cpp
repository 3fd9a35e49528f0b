#include "antijam/properties.hpp"

#include <algorithm>
#include <cmath>

namespace antijam {

namespace {

bool near(double a, double b, double rel_tol) {
    return std::fabs(a - b) <= rel_tol * std::max({std::fabs(a), std::fabs(b), 1e-300});
}

long double sum_p(std::span<const NodeState> states) {
    long double acc = 0.0L;
    for (const NodeState& s : states) {
        acc += s.p;
    }
    return acc;
}

} // namespace

ProtocolPropertyChecker::ProtocolPropertyChecker(ProtocolParams params, double rel_tol)
    : params_(params), rel_tol_(rel_tol) {}

void ProtocolPropertyChecker::report(std::int64_t t, const std::string& what) {
    ++violation_count_;
    if (violations_.size() < 32) {
        violations_.push_back("slot " + std::to_string(t) + ": " + what);
    }
}

void ProtocolPropertyChecker::on_slot(const SlotInspection& insp) {
    const std::int64_t t = insp.record.t;
    const double growth = 1.0 + params_.gamma;
    const std::size_t n = insp.post_slot.size();

    // Hard state invariants.
    for (std::size_t v = 0; v < n; ++v) {
        const NodeState& s = insp.post_slot[v];
        if (s.p > params_.p_hat) {
            report(t, "node " + std::to_string(v) + " p exceeds p_hat");
        }
        if (s.counter < 1 || s.threshold < 1) {
            report(t, "node " + std::to_string(v) + " counter/threshold below 1");
        }
    }

    // Post-Success synchronization: receivers carry the beacon scaled one
    // step down, the sender is untouched until the end-of-slot counter step.
    if (insp.record.outcome == Outcome::Success && insp.beacon != nullptr) {
        const auto sender = static_cast<std::size_t>(*insp.record.sender);
        const Beacon& b = *insp.beacon;
        const double expected_receiver_p = b.p / growth;
        for (std::size_t v = 0; v < n; ++v) {
            const NodeState& s = insp.post_observe[v];
            if (v == sender) {
                if (s != insp.pre_slot[v]) {
                    report(t, "sender state changed during observation phase");
                }
                continue;
            }
            if (s.p != expected_receiver_p || s.counter != b.c || s.threshold != b.T) {
                report(t, "receiver " + std::to_string(v) + " not at (p'/(1+g), c', T')");
            }
        }
        ++checked_fact1_;
    }

    const bool threshold_fired = [&] {
        for (std::size_t v = 0; v < n; ++v) {
            if (insp.post_slot[v].threshold > insp.post_observe[v].threshold) {
                return true;
            }
        }
        return false;
    }();

    const auto p_before = static_cast<double>(sum_p(insp.pre_slot));
    const auto p_after = static_cast<double>(sum_p(insp.post_slot));

    if (!threshold_fired) {
        switch (insp.record.outcome) {
        case Outcome::Idle: {
            const bool clamp_free = std::all_of(
                insp.pre_slot.begin(), insp.pre_slot.end(),
                [&](const NodeState& s) { return s.p < params_.p_hat; });
            if (clamp_free) {
                if (!near(p_after, growth * p_before, rel_tol_)) {
                    report(t, "idle slot did not scale cumulative p by (1+gamma)");
                }
                ++checked_idle_growth_;
            }
            break;
        }
        case Outcome::Success: {
            // Exact only when the receivers already sat one (1+gamma) step
            // below the sender; cap-clamped equalization breaks it.
            const auto sender = static_cast<std::size_t>(*insp.record.sender);
            if (seen_success_ && static_cast<std::int32_t>(sender) == last_sender_) {
                const double expected = insp.pre_slot[sender].p / growth;
                const bool receivers_one_step_down = [&] {
                    for (std::size_t v = 0; v < n; ++v) {
                        if (v != sender && !near(insp.pre_slot[v].p, expected, rel_tol_)) {
                            return false;
                        }
                    }
                    return true;
                }();
                if (receivers_one_step_down) {
                    if (!near(p_after, p_before, rel_tol_)) {
                        report(t, "repeat-sender success changed cumulative p");
                    }
                    ++checked_repeat_sender_;
                }
            }
            break;
        }
        case Outcome::Collision:
        case Outcome::Jammed:
            if (!near(p_after, p_before, rel_tol_)) {
                report(t, "busy slot changed cumulative p");
            }
            ++checked_busy_hold_;
            break;
        }
    }

    if (seen_success_ && n > 0) {
        double mx = insp.post_slot[0].p;
        double mn = insp.post_slot[0].p;
        for (const NodeState& s : insp.post_slot) {
            mx = std::max(mx, s.p);
            mn = std::min(mn, s.p);
        }
        const double ratio = mx / mn;
        if (!near(ratio, 1.0, rel_tol_) && !near(ratio, growth, rel_tol_)) {
            report(t, "p-ratio " + std::to_string(ratio) + " outside {1, 1+gamma}");
        }
        ++checked_ratio_;
    }

    if (insp.record.outcome == Outcome::Success) {
        seen_success_ = true;
        last_sender_ = *insp.record.sender;
    }
}

std::int64_t max_jams_in_any_window(std::span<const SlotRecord> records, std::int64_t window) {
    if (records.empty() || window < 1) {
        return 0;
    }
    const auto w = static_cast<std::size_t>(window);
    std::int64_t count = 0;
    std::int64_t worst = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        count += records[i].jammed ? 1 : 0;
        if (i >= w) {
            count -= records[i - w].jammed ? 1 : 0;
        }
        worst = std::max(worst, count);
    }
    return worst;
}

BudgetScan scan_jam_budget(const RunTrace& trace) {
    const std::int64_t window = trace.config_echo.adversary.window;
    const double epsilon = trace.config_echo.adversary.epsilon;

    BudgetScan scan;
    scan.capacity = AdversaryBudget::jam_capacity(window, epsilon);
    scan.max_in_window = max_jams_in_any_window(trace.records, window);
    scan.exact_ok = scan.max_in_window <= scan.capacity;

    for (std::int64_t factor : {2, 5, 10}) {
        const std::int64_t w = window * factor;
        const auto jams = static_cast<double>(max_jams_in_any_window(trace.records, w));
        if (jams > (1.0 - epsilon) * static_cast<double>(w + window) + 1e-9) {
            scan.wide_ok = false;
        }
    }
    return scan;
}

} // namespace antijam
