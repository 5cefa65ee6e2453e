#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbpc/galois.hpp"
#include "nbpc/golden.hpp"
#include "nbpc/weight3.hpp"

namespace nbpc {

enum class VerifyScope { exhaustive, greedy, all };

std::optional<VerifyScope> verify_scope_from_string(const std::string& s);

struct VerifyRowResult {
    GoldenRecord row;
    std::uint64_t s3_computed = 0;
    std::optional<std::uint64_t> s4_computed;
    std::optional<std::uint64_t> s3_rederived;  // exhaustive re-run, when within budget
    bool failed = false;                        // hard assertion mismatch
    std::string detail;                         // advisory notes / mismatch description
};

struct VerifyReport {
    int q = 0;
    VerifyScope scope = VerifyScope::all;
    std::vector<VerifyRowResult> rows;
    bool all_pass = true;
};

// Re-scores the reference rows of field q:
//  - every non-advisory row: s3_fast on the published exponents must equal
//    the published s3 (sets with a nonzero leading exponent are additionally
//    scored through their canonical translate);
//  - starred rows: recomputed S4 must match; within `budget`, the optimum is
//    re-derived exhaustively and its s3 must match;
//  - greedy (non-starred) rows: S4 is recomputed and reported, mismatches are
//    advisory;
//  - advisory rows: recomputed and reported, never failed.
VerifyReport verify_field(const FieldContext& ctx, const Weight3Tables& tables, VerifyScope scope,
                          std::uint64_t budget, const std::vector<GoldenRecord>& records);

}  // namespace nbpc
