#pragma once

#include <cstdint>

namespace antijam {

// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// Counter-based pseudo-random stream keyed by (seed, stream_id).
//
// Each logical consumer in a run (one per node, one for the adversary) owns
// its own stream, so draws are reproducible and independent of how other
// entities interleave. Output i is mix64(key + i*gamma), i.e. a SplitMix64
// sequence whose start is derived from the key pair.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
        : key_(mix64(mix64(seed ^ 0x8f1bbcdcbfa53e0bULL) +
                     mix64(stream_id ^ 0xd6e8feb86659fd93ULL))) {}

    std::uint64_t next_u64() noexcept {
        return mix64(key_ + (counter_++) * kGoldenGamma);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Consumes exactly one draw regardless of p.
    bool bernoulli(double p) noexcept {
        return next_double() < p;
    }

    // Unbiased uniform integer in [0, n). Requires n >= 1.
    std::uint64_t uniform_below(std::uint64_t n) noexcept {
        // Lemire's nearly-divisionless bounded generation.
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Per-row seed derivation for parameter sweeps: hash(seed_base, a, b).
constexpr std::uint64_t derive_seed(std::uint64_t seed_base, std::uint64_t a,
                                    std::uint64_t b) noexcept {
    std::uint64_t h = mix64(seed_base + kGoldenGamma);
    h = mix64(h ^ (a + 0x165667b19e3779f9ULL));
    h = mix64(h ^ (b + 0x27d4eb2f165667c5ULL));
    return h;
}

} // namespace antijam
