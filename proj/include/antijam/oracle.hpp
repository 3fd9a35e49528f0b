#pragma once

#include "antijam/slot.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace antijam {

// Closed-form per-slot channel probabilities for a vector of independent
// access probabilities, plus a brute-force enumeration used to cross-check
// them. These are the analytical side of the simulator's stochastic behavior.

// Probability the channel is idle: product of (1 - p_v).
double q_idle(std::span<const double> probs);

// Probability exactly one node transmits: sum over v of p_v * prod_{w != v} (1 - p_w).
double q_single(std::span<const double> probs);

// Log-domain forms, stable for very large n where the plain products underflow.
double log_q_idle(std::span<const double> probs);
double log_q_single(std::span<const double> probs); // -inf when all p_v are zero

struct OutcomeProbs {
    double idle = 0.0;
    double single = 0.0;
};

// Exhaustive 2^n enumeration of transmit subsets. Independent route used to
// validate the closed forms; capped at n <= 20 to stay fast.
OutcomeProbs enumerate_outcomes(std::span<const double> probs);

// q0 * p <= q1 <= q0 * p / (1 - p_hat), with p the cumulative probability.
// Throws std::invalid_argument when p_hat >= 1.
bool check_claim1(std::span<const double> probs, double p_hat, double rel_tol = 1e-9);

struct EmpiricalRates {
    double idle_rate = 0.0;
    double success_rate = 0.0;
};

// Observed idle/success frequencies over a frozen-state slot segment.
EmpiricalRates empirical_rates(std::span<const SlotRecord> segment);

} // namespace antijam
