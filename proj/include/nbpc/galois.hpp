#pragma once

#include <cstdint>
#include <vector>

namespace nbpc {

// Binary (polynomial-basis) representation of a GF(2^m) element, value < 2^m.
using gf_elem = std::uint16_t;

// One GF(2^m) instance with dense log/antilog/weight tables.
//
// Elements are polynomials over GF(2) modulo a primitive polynomial P_m[X];
// the nonzero ones are the powers of alpha = X. antilog[a] holds the binary
// representation of alpha^a, log inverts it, and weight caches the popcount
// of each representation. Immutable after build_field; safe to share across
// threads.
struct FieldContext {
    int m = 0;                            // field degree (bits per symbol)
    int q = 0;                            // 2^m
    std::uint16_t primitive_poly = 0;     // bit k = coefficient of X^k
    std::vector<gf_elem> antilog;         // size q-1, antilog[a] = alpha^a
    std::vector<std::uint16_t> log;       // size q, defined for x != 0
    std::vector<std::uint8_t> weight;     // size q, weight[x] = popcount(x)

    int order() const { return q - 1; }

    // alpha^a for any integer a (reduced mod q-1, negatives allowed).
    gf_elem alpha_pow(int a) const {
        const int L = q - 1;
        int r = a % L;
        if (r < 0) r += L;
        return antilog[static_cast<std::size_t>(r)];
    }
};

// Primitive polynomial bitmask shipped for degree m (3 <= m <= 10).
std::uint16_t primitive_poly_for(int m);

// Builds the full context for m in {3,...,10}. Throws config_error for other
// m, or if the shipped polynomial fails to generate all q-1 nonzero elements.
FieldContext build_field(int m);

gf_elem gf_mul(const FieldContext& ctx, gf_elem x, gf_elem y);

inline gf_elem gf_add(gf_elem x, gf_elem y) { return static_cast<gf_elem>(x ^ y); }

inline int weight_of(const FieldContext& ctx, gf_elem x) { return ctx.weight[x]; }

}  // namespace nbpc
