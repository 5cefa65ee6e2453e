#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nbpc/galois.hpp"

namespace nbpc {

// A parity check's coefficient multiset as exponents a_i with h_i = alpha^a_i.
// Exponents are kept reduced mod q-1 and sorted non-decreasing; canonical
// sets additionally start at 0 (see canonicalize in search.hpp).
struct CoeffSet {
    int m = 0;
    std::vector<int> exponents;

    int dc() const { return static_cast<int>(exponents.size()); }
    int q() const { return 1 << m; }
};

// Reduces mod q-1, sorts, validates dc >= 2.
CoeffSet make_coeff_set(int m, std::vector<int> exponents);

// Truncated Hamming-weight spectrum of the binary image of a parity check:
// counts[n] = number of codewords whose m*dc-bit image has weight n, for
// n <= max_degree. Truncation is exact for the tracked low-order terms.
struct Spectrum {
    int max_degree = 0;
    bool truncated = true;
    std::vector<std::uint64_t> counts;  // size max_degree + 1
    std::optional<int> d_min;           // smallest n >= 1 with counts[n] != 0

    std::uint64_t at(int n) const { return counts[static_cast<std::size_t>(n)]; }
    std::uint64_t total() const;  // sum of tracked counts (throws on overflow)
};

// Dynamic program over partial syndromes: layer l holds, for every y in
// GF(q), the weight polynomial of the l-symbol prefixes with sum h_i x_i = y;
// each layer convolves with X^{W(x)} per symbol x. O(q^2 * dc * D) work.
Spectrum compute_spectrum(const FieldContext& ctx, const CoeffSet& H, int max_degree);

// Independent oracle: enumerates all q^(dc-1) codewords and tallies exact
// binary weights (full spectrum, max_degree = m*dc). Refuses instances with
// q^(dc-1) > 2^24.
Spectrum brute_force_spectrum(const FieldContext& ctx, const CoeffSet& H);

}  // namespace nbpc
