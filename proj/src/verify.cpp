#include "antijam/verify.hpp"

#include "antijam/engine.hpp"
#include "antijam/oracle.hpp"
#include "antijam/properties.hpp"
#include "antijam/rng.hpp"

#include <cmath>
#include <sstream>

namespace antijam {

namespace {

std::vector<double> random_prob_vector(RngStream& rng, std::size_t n, double p_max) {
    std::vector<double> probs(n);
    for (double& p : probs) {
        p = rng.next_double() * p_max;
    }
    return probs;
}

VerifyResult check_enumeration_equivalence(std::uint64_t seed) {
    RngStream rng(seed, 1);
    double worst = 0.0;
    for (std::size_t n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto probs = random_prob_vector(rng, n, 0.9);
            const OutcomeProbs brute = enumerate_outcomes(probs);
            worst = std::max(worst, std::fabs(brute.idle - q_idle(probs)));
            worst = std::max(worst, std::fabs(brute.single - q_single(probs)));
        }
    }
    std::ostringstream detail;
    detail << "max |closed form - enumeration| = " << worst;
    return {"q0/q1 closed forms vs 2^n enumeration (n=1..12, 200 vectors each)", worst <= 1e-12,
            detail.str()};
}

VerifyResult check_claim1_random(std::uint64_t seed) {
    RngStream rng(seed, 2);
    const double p_hat = 1.0 / 24.0;
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform_below(64));
        if (!check_claim1(random_prob_vector(rng, n, p_hat), p_hat)) {
            ++failures;
        }
    }
    std::ostringstream detail;
    detail << failures << " violations in 1000 random vectors";
    return {"Claim 1 bounds on random probability vectors (p_hat = 1/24)", failures == 0,
            detail.str()};
}

VerifyResult check_q0_q1_sum_bound(std::uint64_t seed) {
    RngStream rng(seed, 3);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform_below(32));
        const auto probs = random_prob_vector(rng, n, 0.9);
        if (q_idle(probs) + q_single(probs) > 1.0 + 1e-12) {
            ++failures;
        }
    }
    return {"q0 + q1 <= 1 on random vectors", failures == 0,
            std::to_string(failures) + " violations in 1000 vectors"};
}

VerifyResult check_log_domain_forms(std::uint64_t seed) {
    RngStream rng(seed, 4);
    double worst_rel = 0.0;
    for (std::size_t n : {3u, 40u, 1000u}) {
        const auto probs = random_prob_vector(rng, n, 1.0 / 24.0);
        worst_rel = std::max(worst_rel,
                             std::fabs(std::exp(log_q_idle(probs)) - q_idle(probs)) /
                                 q_idle(probs));
        worst_rel = std::max(worst_rel,
                             std::fabs(std::exp(log_q_single(probs)) - q_single(probs)) /
                                 q_single(probs));
    }
    // Where the plain products underflow, validate the algebraic identity
    // log q1 = log q0 + log(sum p/(1-p)) between the two accumulation routes.
    const auto big = random_prob_vector(rng, 100000, 1.0 / 24.0);
    double odds = 0.0;
    for (double p : big) {
        odds += p / (1.0 - p);
    }
    const double identity_gap =
        std::fabs(log_q_single(big) - (log_q_idle(big) + std::log(odds)));
    const bool ok = worst_rel <= 1e-9 && identity_gap <= 1e-9;
    std::ostringstream detail;
    detail << "max rel gap small-n = " << worst_rel << ", identity gap n=1e5 = " << identity_gap;
    return {"log-domain q0/q1 agree with plain products and each other", ok, detail.str()};
}

VerifyResult check_live_run_properties(std::uint64_t seed) {
    SimConfig config;
    config.n = 200;
    config.steps = 100000;
    config.seed = seed;
    config.adversary = AdversaryConfig{100, 0.5, JamStrategy::BusyDet};
    config.params = ProtocolParams{};

    ProtocolPropertyChecker checker(config.antijam_params());
    std::int64_t claim1_failures = 0;
    std::vector<double> probs(static_cast<std::size_t>(config.n));
    const RunTrace trace = run(config, [&](const SlotInspection& insp) {
        checker.on_slot(insp);
        for (std::size_t v = 0; v < probs.size(); ++v) {
            probs[v] = insp.pre_slot[v].p;
        }
        if (!check_claim1(probs, config.antijam_params().p_hat)) {
            ++claim1_failures;
        }
    });

    const BudgetScan scan = scan_jam_budget(trace);
    std::ostringstream detail;
    detail << checker.violation_count() << " protocol violations, " << claim1_failures
           << " Claim-1 violations, max jams/window " << scan.max_in_window << "/"
           << scan.capacity << " over " << trace.records.size() << " slots";
    if (!checker.violations().empty()) {
        detail << "; first: " << checker.violations().front();
    }
    const bool ok = checker.violation_count() == 0 && claim1_failures == 0 && scan.exact_ok &&
                    scan.wide_ok && checker.checked_fact1() > 0 &&
                    checker.checked_idle_growth() > 0;
    return {"per-slot protocol relations, Claim 1 and jam budget on a live run", ok,
            detail.str()};
}

VerifyResult check_frozen_rates(std::uint64_t seed) {
    bool ok = true;
    std::ostringstream detail;
    const std::int64_t steps = 100000;
    int case_idx = 0;
    for (const std::vector<double>& probs :
         {std::vector<double>{0.5, 0.5}, std::vector<double>{0.1},
          std::vector<double>{0.02, 0.01, 0.03, 0.04, 0.005}}) {
        const auto records = run_frozen(probs, steps, seed + static_cast<std::uint64_t>(case_idx));
        const EmpiricalRates rates = empirical_rates(records);
        const double expected_idle = q_idle(probs);
        const double expected_single = q_single(probs);
        const auto sigma = [&](double q) {
            return std::sqrt(q * (1.0 - q) / static_cast<double>(steps));
        };
        if (std::fabs(rates.idle_rate - expected_idle) > 4.0 * sigma(expected_idle) ||
            std::fabs(rates.success_rate - expected_single) > 4.0 * sigma(expected_single)) {
            ok = false;
            detail << "case " << case_idx << " outside 4-sigma; ";
        }
        ++case_idx;
    }
    if (ok) {
        detail << "3 frozen-state cases within 4-sigma of q0/q1";
    }
    return {"frozen-state empirical idle/success rates match closed forms", ok, detail.str()};
}

} // namespace

std::vector<VerifyResult> run_verify_suite(std::uint64_t seed) {
    return {
        check_enumeration_equivalence(seed), check_claim1_random(seed),
        check_q0_q1_sum_bound(seed),         check_log_domain_forms(seed),
        check_live_run_properties(seed),     check_frozen_rates(seed),
    };
}

} // namespace antijam
