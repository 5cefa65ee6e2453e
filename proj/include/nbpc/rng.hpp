#pragma once

#include <cstdint>

namespace nbpc {

// SplitMix64 finalizer; full-period mixer used both as the generator step and
// to derive independent per-attempt streams from (master_seed, attempt).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Counter-derived stream: identical (master_seed, attempt) always yields the
// same sequence, independent of how attempts are scheduled across threads.
inline SplitMix64 make_stream(std::uint64_t master_seed, std::uint64_t attempt) {
    return SplitMix64{mix64(master_seed ^ mix64(attempt))};
}

// Uniform draw in [0, bound), bound >= 1; rejects the wraparound sliver so
// every residue is exactly equally likely.
inline std::uint64_t uniform_below(SplitMix64& g, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = g.next();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace nbpc
