#include "nbpc/sampler.hpp"

#include <stdexcept>
#include <string>

#include "nbpc/errors.hpp"
#include "nbpc/rng.hpp"
#include "nbpc/weight3.hpp"

namespace nbpc {

SamplerConfig make_sampler_config(int m, int dc, GammaTable& gamma, std::uint64_t master_seed) {
    if (gamma.gap() != m) throw integrity_error("sampler: gamma table built for a different gap");
    if (dc < 2) throw std::invalid_argument("sampler: dc must be >= 2");
    if (dc > max_dc_with_s2_zero(m)) {
        throw config_error("no admissible set: dc=" + std::to_string(dc) + " exceeds floor(2^m/m)=" +
                           std::to_string(max_dc_with_s2_zero(m)) + " for m=" + std::to_string(m));
    }
    gamma.ensure(dc - 1, (1 << m) - 2 * m);
    // dc*m must also fit in the cycle of length q-1; at m in {4, 8} this
    // cuts one degree off the floor(2^m/m) bound
    if (gamma.value(dc - 1, (1 << m) - 2 * m).is_zero()) {
        throw config_error("no admissible set exists for m=" + std::to_string(m) +
                           ", dc=" + std::to_string(dc));
    }
    return SamplerConfig{m, dc, &gamma, master_seed};
}

CoeffSet sample_uniform(const SamplerConfig& cfg, std::uint64_t attempt) {
    const int m = cfg.m;
    const int n = (1 << m) - 2 * m;  // window the dc-1 free exponents live in
    const int p = cfg.dc - 1;
    SplitMix64 rng = make_stream(cfg.master_seed, attempt);

    std::vector<int> exps;
    exps.reserve(static_cast<std::size_t>(cfg.dc));
    exps.push_back(0);

    int prev = -m;  // shifted coordinate of the previous exponent
    for (int i = 1; i <= p; ++i) {
        const int remaining = p - i;
        const BigUint& den = cfg.gamma->value(remaining + 1, n - prev - m);
        const BigUint r = uniform_below(rng, den);
        BigUint cum;
        int t = prev + m;
        for (;; ++t) {
            cum += cfg.gamma->value(remaining, n - t - m);
            if (cum > r) break;
        }
        if (t > n - 1) throw std::logic_error("sampler: walked past the window");
        prev = t;
        exps.push_back(t + m);
    }
    return make_coeff_set(m, std::move(exps));
}

std::optional<CoeffSet> enrich_from_lower_degree(const CoeffSet& lower_opt,
                                                 const SamplerConfig& cfg,
                                                 std::uint64_t attempt) {
    if (lower_opt.m != cfg.m) throw integrity_error("enrich: set built for a different field");
    if (lower_opt.dc() != cfg.dc - 1) {
        throw std::invalid_argument("enrich: seed set must have degree dc-1");
    }
    if (!circular_gaps_ok(cfg.m, lower_opt.exponents)) {
        throw std::invalid_argument("enrich: seed set has a circular gap < m");
    }

    const int m = cfg.m;
    const int L = (1 << m) - 1;
    std::vector<int> slots;
    for (int b = 0; b < L; ++b) {
        bool ok = true;
        for (int e : lower_opt.exponents) {
            int d = (b - e) % L;
            if (d < 0) d += L;
            if (std::min(d, L - d) < m) {
                ok = false;
                break;
            }
        }
        if (ok) slots.push_back(b);
    }
    if (slots.empty()) return std::nullopt;

    SplitMix64 rng = make_stream(cfg.master_seed, attempt);
    const int b = slots[static_cast<std::size_t>(uniform_below(rng, slots.size()))];
    std::vector<int> exps = lower_opt.exponents;
    exps.push_back(b);
    return make_coeff_set(m, std::move(exps));
}

}  // namespace nbpc
