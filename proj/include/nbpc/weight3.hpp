#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "nbpc/galois.hpp"
#include "nbpc/spectrum.hpp"

namespace nbpc {

// Precomputed weight-3 codeword counts for normalized pairs and triples:
//   t2[a]    = S3({alpha^0, alpha^a})
//   t3[a][b] = S3({alpha^0, alpha^a, alpha^b})   (symmetric in a, b)
// Immutable once built; t3 is stored dense row-major, (q-1)^2 entries.
struct Weight3Tables {
    int m = 0;
    int q = 0;
    std::uint16_t primitive_poly = 0;
    std::vector<std::uint32_t> t2;
    std::vector<std::uint32_t> t3;

    std::uint32_t t2_at(int a) const { return t2[static_cast<std::size_t>(a)]; }
    std::uint32_t t3_at(int a, int b) const {
        return t3[static_cast<std::size_t>(a) * static_cast<std::size_t>(q - 1) +
                  static_cast<std::size_t>(b)];
    }
};

// True iff every pair of circular exponent gaps is >= m (no weight-2
// codeword exists). Requires m > 2.
bool s2_is_zero(const FieldContext& ctx, const CoeffSet& H);

// Same test on raw exponents, without a field context.
bool circular_gaps_ok(int m, const std::vector<int>& exponents);

// Largest dc for which an all-gaps->=m set exists: floor(2^m / m). m > 2.
int max_dc_with_s2_zero(int m);

// Weight-split table build: the three-nonzero-symbol weight-(1,1,1) pattern
// is counted by scanning the m^2 weight-1 symbol pairs and testing whether
// the forced third symbol also has weight 1; the remaining patterns are the
// embedded pair contributions already held in t2. O(q^2 m^2) total instead
// of the q^4 per-table cost of scoring every entry with the spectrum DP.
// Parallelized over rows with OpenMP.
Weight3Tables build_tables(const FieldContext& ctx);

// Reference build: every entry scored with compute_spectrum. Serial and
// O(q^4); intended for validating build_tables on small fields and for the
// benchmark, not for production use.
Weight3Tables build_tables_reference(const FieldContext& ctx);

// Algorithm cost is exactly C(dc) = dc(dc-1)(dc+1)/6 table reads: one t2
// read per pair and one t3 read per triple. When `table_reads` is non-null
// the exact count of reads performed is added to it.
std::uint64_t s3_fast(const Weight3Tables& tables, const CoeffSet& H,
                      std::uint64_t* table_reads = nullptr);

// --- cache persistence -----------------------------------------------------
// Layout (little-endian): "NBT3", u16 version=1, u8 m, u16 primitive_poly,
// 3 zero bytes, t2 as (q-1) u32, t3 row-major as (q-1)^2 u32.

void save_tables(const Weight3Tables& tables, const std::filesystem::path& path);

// Throws integrity_error on bad magic/version/size.
Weight3Tables load_tables(const std::filesystem::path& path);

// Loads `path` when it exists (rejecting caches built for a different field
// or polynomial), otherwise builds and, if a path was given, saves to it.
Weight3Tables load_or_build(const FieldContext& ctx,
                            const std::optional<std::filesystem::path>& path);

}  // namespace nbpc
