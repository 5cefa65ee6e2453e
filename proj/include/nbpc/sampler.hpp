#pragma once

#include <cstdint>
#include <optional>

#include "nbpc/combinatorics.hpp"
#include "nbpc/spectrum.hpp"

namespace nbpc {

// Everything one admissible-set draw needs. The gamma table is shared,
// pre-extended, and read-only; a draw is a pure function of
// (config, attempt index), so any number of attempts may run concurrently.
struct SamplerConfig {
    int m = 0;
    int dc = 0;
    const GammaTable* gamma = nullptr;
    std::uint64_t master_seed = 0;
};

// Validates dc against floor(2^m/m) and extends `gamma` far enough for
// sampling; call once before handing the config to workers.
SamplerConfig make_sampler_config(int m, int dc, GammaTable& gamma, std::uint64_t master_seed);

// Draws one canonical-form admissible set (a1 = 0, sorted, all circular gaps
// >= m), exactly uniform over the xi_m(dc) such sets: exponents are drawn
// left to right, each with probability (completions after it) / (completions
// before it), both exact big-integer gamma counts.
CoeffSet sample_uniform(const SamplerConfig& cfg, std::uint64_t attempt);

// Inserts one new exponent, uniformly over the positions that keep every
// circular gap >= m, into an optimized set of degree dc-1. Returns nullopt
// when the packing is tight and no slot exists (caller falls back to
// sample_uniform).
std::optional<CoeffSet> enrich_from_lower_degree(const CoeffSet& lower_opt,
                                                 const SamplerConfig& cfg,
                                                 std::uint64_t attempt);

}  // namespace nbpc
