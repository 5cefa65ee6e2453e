#include "nbpc/spectrum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nbpc/errors.hpp"

namespace nbpc {

namespace {

inline void checked_add(std::uint64_t& acc, std::uint64_t v) {
    if (acc > UINT64_MAX - v) throw std::overflow_error("spectrum count overflows 64 bits");
    acc += v;
}

}  // namespace

CoeffSet make_coeff_set(int m, std::vector<int> exponents) {
    if (m < 1 || m > 16) throw std::invalid_argument("make_coeff_set: bad field degree");
    if (exponents.size() < 2) throw std::invalid_argument("make_coeff_set: need dc >= 2");
    const int L = (1 << m) - 1;
    for (auto& e : exponents) {
        e %= L;
        if (e < 0) e += L;
    }
    std::sort(exponents.begin(), exponents.end());
    return CoeffSet{m, std::move(exponents)};
}

std::uint64_t Spectrum::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts) checked_add(sum, c);
    return sum;
}

Spectrum compute_spectrum(const FieldContext& ctx, const CoeffSet& H, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("compute_spectrum: max_degree must be >= 1");
    if (H.m != ctx.m) throw integrity_error("compute_spectrum: coefficient set built for a different field");

    const int q = ctx.q;
    const int L = q - 1;
    const int D = max_degree;
    const std::size_t W = static_cast<std::size_t>(D) + 1;

    // ping-pong state: one truncated weight polynomial per syndrome value
    std::vector<std::uint64_t> cur(static_cast<std::size_t>(q) * W, 0);
    std::vector<std::uint64_t> next(static_cast<std::size_t>(q) * W, 0);
    cur[0] = 1;  // empty prefix solves y = 0

    std::vector<gf_elem> mul(static_cast<std::size_t>(q));
    for (int a : H.exponents) {
        mul[0] = 0;
        for (int x = 1; x < q; ++x) {
            int s = ctx.log[static_cast<std::size_t>(x)] + a;
            if (s >= L) s -= L;
            mul[static_cast<std::size_t>(x)] = ctx.antilog[static_cast<std::size_t>(s)];
        }
        std::fill(next.begin(), next.end(), 0);
        for (int s = 0; s < q; ++s) {
            const std::uint64_t* src = &cur[static_cast<std::size_t>(s) * W];
            bool empty = true;
            for (std::size_t n = 0; n < W; ++n) {
                if (src[n]) {
                    empty = false;
                    break;
                }
            }
            if (empty) continue;
            for (int x = 0; x < q; ++x) {
                const int w = ctx.weight[static_cast<std::size_t>(x)];
                if (w > D) continue;
                std::uint64_t* dst = &next[static_cast<std::size_t>(s ^ mul[static_cast<std::size_t>(x)]) * W];
                for (int n = D; n >= w; --n) checked_add(dst[n], src[n - w]);
            }
        }
        cur.swap(next);
    }

    Spectrum out;
    out.max_degree = D;
    out.truncated = D < ctx.m * H.dc();
    out.counts.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(W));
    for (int n = 1; n <= D; ++n) {
        if (out.counts[static_cast<std::size_t>(n)]) {
            out.d_min = n;
            break;
        }
    }
    return out;
}

Spectrum brute_force_spectrum(const FieldContext& ctx, const CoeffSet& H) {
    if (H.m != ctx.m) throw integrity_error("brute_force_spectrum: coefficient set built for a different field");
    const int q = ctx.q;
    const int p = H.dc() - 1;

    std::uint64_t total = 1;
    for (int i = 0; i < p; ++i) {
        total *= static_cast<std::uint64_t>(q);
        if (total > (1ULL << 24)) {
            throw size_error("brute_force_spectrum: q^(dc-1) exceeds 2^24 (q=" +
                             std::to_string(q) + ", dc=" + std::to_string(H.dc()) + ")");
        }
    }

    const int D = ctx.m * H.dc();
    Spectrum out;
    out.max_degree = D;
    out.truncated = false;
    out.counts.assign(static_cast<std::size_t>(D) + 1, 0);

    const int a1 = H.exponents[0];
    const int L = q - 1;
    std::vector<int> xs(static_cast<std::size_t>(p), 0);
    for (std::uint64_t it = 0;; ++it) {
        gf_elem rhs = 0;
        int w = 0;
        for (int i = 0; i < p; ++i) {
            const gf_elem x = static_cast<gf_elem>(xs[static_cast<std::size_t>(i)]);
            rhs = gf_add(rhs, gf_mul(ctx, ctx.alpha_pow(H.exponents[static_cast<std::size_t>(i) + 1]), x));
            w += ctx.weight[x];
        }
        // solve h1*x1 = rhs (char 2: addition is its own inverse)
        gf_elem x1 = 0;
        if (rhs != 0) {
            int e = ctx.log[rhs] - a1;
            if (e < 0) e += L;
            x1 = ctx.antilog[static_cast<std::size_t>(e)];
        }
        w += ctx.weight[x1];
        ++out.counts[static_cast<std::size_t>(w)];

        if (it + 1 == total) break;
        for (int i = 0; i < p; ++i) {
            if (++xs[static_cast<std::size_t>(i)] < q) break;
            xs[static_cast<std::size_t>(i)] = 0;
        }
    }

    for (int n = 1; n <= D; ++n) {
        if (out.counts[static_cast<std::size_t>(n)]) {
            out.d_min = n;
            break;
        }
    }
    return out;
}

}  // namespace nbpc
