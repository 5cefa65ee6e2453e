#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nbpc/galois.hpp"
#include "nbpc/spectrum.hpp"
#include "nbpc/weight3.hpp"

namespace nbpc {

enum class SearchMethod { exhaustive, greedy };

std::string to_string(SearchMethod method);

// One search outcome: the best coefficient set found plus the statistics of
// the S3 distribution it was measured against.
//   delta3 = (m3 - s3) / sigma3        (0 when sigma3 == 0)
//   r3_percent = 100 * s3 / m3         (0 when m3 == 0)
// For exhaustive runs the stats are exact over all visited sets and
// `attempts` equals the visit count (== xi_m(dc)); for greedy runs they are
// over the uniform initial draws and `attempts` is the restart count.
struct SearchReport {
    int q = 0;
    int dc = 0;
    SearchMethod method = SearchMethod::exhaustive;
    std::vector<int> exponents;  // canonical (lexicographically minimal translate)
    std::uint64_t s3 = 0;
    std::optional<std::uint64_t> s4;  // present when s3 == 0
    double m3 = 0.0;
    double sigma3 = 0.0;
    double delta3 = 0.0;
    double r3_percent = 0.0;
    std::uint64_t attempts = 0;
    std::uint64_t samples_for_stats = 0;
    std::uint64_t seed = 0;
    bool is_exhaustive_optimum = false;
};

// Representative of the equivalence class under multiplication by a constant:
// of the dc translates H * alpha^{-a_i} (each sorted, leading exponent 0),
// the lexicographically smallest exponent vector. Minimizes a2 in particular.
CoeffSet canonicalize(const FieldContext& ctx, const CoeffSet& H);

// Same, starting from raw field elements. Throws on a zero coefficient.
CoeffSet canonicalize_elements(const FieldContext& ctx, const std::vector<gf_elem>& coeffs);

struct ExhaustiveOptions {
    std::uint64_t budget = 100'000'000;  // refuse enumerations past this many sets
};

// Full enumeration of the xi_m(dc) admissible canonical-form sets, keeping
// the argmin of S3 with an S4 refinement among S3 = 0 candidates. Nested
// windows enforce every circular gap >= m. Partitioned over the first free
// exponent across OpenMP workers; the best-of reduction uses the total order
// (s3, s4, lexicographic canonical exponents), so results do not depend on
// scheduling. Visits exactly xi_m(dc) sets (verified internally).
SearchReport exhaustive(const FieldContext& ctx, const Weight3Tables& tables, int dc,
                        const ExhaustiveOptions& opt = {});

// Straightforward serial version scoring each visited set with a full
// s3_fast call; reference for tests and the benchmark.
SearchReport exhaustive_reference(const FieldContext& ctx, const Weight3Tables& tables, int dc,
                                  const ExhaustiveOptions& opt = {});

// Coordinate descent over the free exponents (leading 0 pinned): position i
// scans b in [a_{i-1}+m, a_{i+1}-m] (the last window ends at q-1-m so the
// wrap gap stays >= m), accepting only strict S3 improvements, and sweeps
// until a full pass makes none. `sweep_s3`, when given, records the S3 value
// after the initial state and after each sweep.
CoeffSet greedy_descent(const FieldContext& ctx, const Weight3Tables& tables, CoeffSet start,
                        std::vector<std::uint64_t>* sweep_s3 = nullptr);

// Reference implementation of the same descent re-scoring every candidate
// with a full s3_fast call; must produce identical output.
CoeffSet greedy_descent_reference(const FieldContext& ctx, const Weight3Tables& tables,
                                  CoeffSet start, std::vector<std::uint64_t>* sweep_s3 = nullptr);

struct GreedyOptions {
    std::uint64_t attempts = 20'000;
    std::uint64_t seed = 0;
    // Fraction of attempts seeded by inserting an exponent into
    // `enrich_from` (a degree dc-1 optimized set) instead of sampling
    // uniformly. Ignored when enrich_from is empty.
    double enrich_fraction = 0.0;
    std::optional<CoeffSet> enrich_from;
};

// Restarted greedy descent from independent uniform draws (streams derived
// from (seed, attempt)). Deterministic for fixed options regardless of the
// parallel schedule. M3/sigma3 come from the uniform initial draws.
SearchReport repeated_greedy(const FieldContext& ctx, const Weight3Tables& tables, int dc,
                             const GreedyOptions& opt = {});

struct StatsResult {
    double m3 = 0.0;
    double sigma3 = 0.0;  // sample standard deviation, divisor n-1
    std::map<std::uint32_t, std::uint64_t> histogram;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// S3 over `samples` uniform admissible draws. samples >= 2.
StatsResult estimate_stats(const FieldContext& ctx, const Weight3Tables& tables, int dc,
                           std::uint64_t samples, std::uint64_t seed);

}  // namespace nbpc
