#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace antijam {

struct VerifyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// The analytical property suite: closed forms vs exhaustive enumeration,
// Claim-1 bounds on random vectors and on live protocol snapshots, the
// per-slot protocol relations, the jam-budget window bound, and frozen-state
// empirical rates against their closed forms. Deterministic in the seed.
std::vector<VerifyResult> run_verify_suite(std::uint64_t seed = 0x5eedULL);

} // namespace antijam
