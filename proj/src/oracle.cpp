#include "antijam/oracle.hpp"

#include "antijam/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace antijam {

double q_idle(std::span<const double> probs) {
    double q = 1.0;
    for (double p : probs) {
        q *= 1.0 - p;
    }
    return q;
}

double q_single(std::span<const double> probs) {
    const std::size_t n = probs.size();
    // suffix[v] = prod_{w > v} (1 - p_w); combined with a running prefix this
    // evaluates the literal sum-of-products in O(n).
    std::vector<double> suffix(n + 1, 1.0);
    for (std::size_t v = n; v-- > 0;) {
        suffix[v] = suffix[v + 1] * (1.0 - probs[v]);
    }
    double prefix = 1.0;
    double q = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        q += probs[v] * prefix * suffix[v + 1];
        prefix *= 1.0 - probs[v];
    }
    return q;
}

double log_q_idle(std::span<const double> probs) {
    double acc = 0.0;
    for (double p : probs) {
        acc += std::log1p(-p);
    }
    return acc;
}

double log_q_single(std::span<const double> probs) {
    // log sum_v exp(log p_v - log(1 - p_v)) + log q0, skipping zero entries.
    const double log_q0 = log_q_idle(probs);
    double max_term = -std::numeric_limits<double>::infinity();
    for (double p : probs) {
        if (p > 0.0) {
            max_term = std::max(max_term, std::log(p) - std::log1p(-p));
        }
    }
    if (!std::isfinite(max_term)) {
        return -std::numeric_limits<double>::infinity();
    }
    double acc = 0.0;
    for (double p : probs) {
        if (p > 0.0) {
            acc += std::exp(std::log(p) - std::log1p(-p) - max_term);
        }
    }
    return log_q0 + max_term + std::log(acc);
}

OutcomeProbs enumerate_outcomes(std::span<const double> probs) {
    const std::size_t n = probs.size();
    if (n > 20) {
        throw std::invalid_argument("enumerate_outcomes: n too large for 2^n enumeration");
    }
    OutcomeProbs out;
    const std::uint32_t subsets = 1u << n;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        double prob = 1.0;
        for (std::size_t v = 0; v < n; ++v) {
            prob *= (mask >> v) & 1u ? probs[v] : 1.0 - probs[v];
        }
        const int transmitters = __builtin_popcount(mask);
        if (transmitters == 0) {
            out.idle += prob;
        } else if (transmitters == 1) {
            out.single += prob;
        }
    }
    return out;
}

namespace {

bool leq_with_slack(double a, double b, double rel_tol) {
    const double slack = rel_tol * std::max({std::fabs(a), std::fabs(b), 1e-300});
    return a <= b + slack;
}

} // namespace

bool check_claim1(std::span<const double> probs, double p_hat, double rel_tol) {
    if (p_hat >= 1.0) {
        throw std::invalid_argument("check_claim1: p_hat must be < 1");
    }
    double p = 0.0;
    for (double pv : probs) {
        p += pv;
    }
    const double q0 = q_idle(probs);
    const double q1 = q_single(probs);
    return leq_with_slack(q0 * p, q1, rel_tol) &&
           leq_with_slack(q1, q0 * p / (1.0 - p_hat), rel_tol);
}

EmpiricalRates empirical_rates(std::span<const SlotRecord> segment) {
    if (segment.empty()) {
        throw MetricsError("empirical_rates: empty segment");
    }
    std::int64_t idle = 0;
    std::int64_t success = 0;
    for (const SlotRecord& r : segment) {
        if (r.outcome == Outcome::Idle) {
            ++idle;
        } else if (r.outcome == Outcome::Success) {
            ++success;
        }
    }
    const auto total = static_cast<double>(segment.size());
    return EmpiricalRates{static_cast<double>(idle) / total,
                          static_cast<double>(success) / total};
}

} // namespace antijam
