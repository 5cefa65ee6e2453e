// Acceptance suite: runs the twelve release criteria and prints one
// PASS/FAIL line each. Exits nonzero if any criterion fails.
//
// Criterion 5 is expected to fail its dc=3 sub-check: the reference table's
// S3 value of 0 for the best degree-3 check over GF(64) is not attainable —
// brute-force enumeration shows the optimum is 3 (see the FAIL detail).
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nbpc/combinatorics.hpp"
#include "nbpc/errors.hpp"
#include "nbpc/galois.hpp"
#include "nbpc/golden.hpp"
#include "nbpc/rng.hpp"
#include "nbpc/sampler.hpp"
#include "nbpc/search.hpp"
#include "nbpc/spectrum.hpp"
#include "nbpc/weight3.hpp"
#include "test_util.hpp"

using namespace nbpc;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 1;  // master seed for every stochastic criterion

struct Failure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw Failure{message};
}

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

struct Fixtures {
    std::map<int, FieldContext> fields;
    std::map<int, Weight3Tables> tables;

    const FieldContext& field(int m) {
        auto it = fields.find(m);
        if (it == fields.end()) it = fields.emplace(m, build_field(m)).first;
        return it->second;
    }
    const Weight3Tables& table(int m) {
        auto it = tables.find(m);
        if (it == tables.end()) it = tables.emplace(m, build_tables(field(m))).first;
        return it->second;
    }
};

Fixtures fx;

// ---- criterion 1: spectrum oracle equivalence -------------------------------

void criterion_oracle_equivalence() {
    SplitMix64 rng{mix64(kSeed)};
    int checked = 0;
    for (int m : {3, 4}) {
        const FieldContext& ctx = fx.field(m);
        const Weight3Tables& T = fx.table(m);
        for (int dc : {2, 3, 4}) {
            for (int it = 0; it < 100; ++it) {
                const CoeffSet H = nbpc::test::random_set(rng, m, dc);
                const Spectrum slow = brute_force_spectrum(ctx, H);
                const Spectrum fast = compute_spectrum(ctx, H, m * dc);
                require(fast.counts == slow.counts,
                        "spectrum mismatch on GF(" + str(ctx.q) + ") dc=" + str(dc));
                require(s3_fast(T, H) == slow.at(3), "s3_fast mismatch");
                require(s2_is_zero(ctx, H) == (slow.at(2) == 0), "s2_is_zero mismatch");
                ++checked;
            }
        }
    }
    require(checked >= 500, "need at least 500 sets");
}

// ---- criterion 2: pair separation rule / vanishing S1 -----------------------

void criterion_pair_scan() {
    for (int m : {3, 4}) {
        const FieldContext& ctx = fx.field(m);
        for (int a = 0; a < ctx.q - 1; ++a) {
            const Spectrum s = brute_force_spectrum(ctx, make_coeff_set(m, {0, a}));
            require((s.at(2) == 0) == (a >= m && a <= ctx.q - 1 - m),
                    "pair separation rule fails at m=" + str(m) + ", a=" + str(a));
            require(s.at(1) == 0, "S1 != 0");
        }
    }
    const FieldContext& gf64 = fx.field(6);
    for (int a = 0; a < 63; ++a) {
        const Spectrum s = compute_spectrum(gf64, make_coeff_set(6, {0, a}), 2);
        require((s.at(2) == 0) == (a >= 6 && a <= 57), "GF(64) pair rule fails at a=" + str(a));
        require(s.at(1) == 0, "S1 != 0");
    }
}

// ---- criterion 3: gamma table ------------------------------------------------

void criterion_gamma_table() {
    // the published 5 x 18 grid for gap 5, n = 5..22
    const std::uint64_t grid[5][18] = {
        {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22},
        {0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105, 120, 136, 153},
        {0, 0, 0, 0, 0, 0, 1, 4, 10, 20, 35, 56, 84, 120, 165, 220, 286, 364},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 5, 15, 35, 70, 126, 210},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 6},
    };
    GammaTable table(5);
    table.ensure(5, 22);
    for (int p = 1; p <= 5; ++p) {
        for (int n = 5; n <= 22; ++n) {
            require(table.value(p, n) == BigUint(grid[p - 1][n - 5]),
                    "gamma_5(" + str(p) + "," + str(n) + ") != published value");
        }
    }
    require(table.value(3, 22) == BigUint(364), "gamma_5(3,22)");
    require(table.value(4, 17) == BigUint(5), "gamma_5(4,17)");

    for (int m = 3; m <= 10; ++m) {
        for (int n = m - 1; n <= m + 60; ++n) {
            require(gamma_closed_p2(m, n) == gamma(m, 2, n),
                    "closed form mismatch at m=" + str(m) + ", n=" + str(n));
        }
    }

    for (int m : {3, 5, 8}) {
        GammaTable t(m);
        t.ensure(4, 30);
        for (int p = 1; p <= 4; ++p) {
            for (int n = 0; n <= 30; ++n) {
                if (t.value(p, n) > BigUint(100000)) continue;
                const auto tuples = nbpc::test::all_gap_tuples(m, p, n);
                require(BigUint(tuples.size()) == t.value(p, n),
                        "enumeration count mismatch at (" + str(m) + "," + str(p) + "," + str(n) +
                            ")");
                for (const auto& tup : tuples) {
                    for (std::size_t i = 0; i + 1 < tup.size(); ++i) {
                        require(tup[i + 1] - tup[i] >= m, "gap violation in enumeration");
                    }
                }
            }
        }
    }
}

// ---- criterion 4: xi ----------------------------------------------------------

void criterion_xi() {
    require(xi(5, 4) == BigUint(364), "xi_5(4) != 364");

    const SearchReport r = exhaustive(fx.field(5), fx.table(5), 4);
    require(r.attempts == 364, "GF(32) dc=4 visit counter != 364");
    // counters of the GF(64) runs are asserted inside criterion 5 as well

    const std::string dec = xi(8, 20).to_decimal();
    require(dec.size() == 23 && dec.substr(0, 3) == "239",
            "xi_8(20) = " + xi(8, 20).to_scientific(3) + " != the listed 2.39e22. (The listed "
            "figure is not consistent with the count's own definition, which this suite pins "
            "via xi_5(4)=364 and the visit counters: the published grid, the closed form and "
            "direct enumeration all give the same recursion, and with it xi_8(20) = "
            "gamma_8(19,240) = " + dec + ". Using one point too many reproduces the quoted "
            "digits with a different exponent: gamma_8(20,240) = " +
            gamma(8, 20, 240).to_scientific(3) + ")");
}

// ---- criterion 5: GF(64) exhaustive reproduction ------------------------------

void criterion_gf64_exhaustive() {
    const std::uint64_t expected[8] = {0, 20, 51, 100, 173, 276, 402, 560};
    const FieldContext& ctx = fx.field(6);
    const Weight3Tables& T = fx.table(6);
    std::string problems;
    for (int dc = 3; dc <= 10; ++dc) {
        const SearchReport r = exhaustive(ctx, T, dc);
        require(BigUint(r.attempts) == xi(6, dc), "visit counter != xi at dc=" + str(dc));
        if (r.s3 != expected[dc - 3]) {
            problems += "dc=" + str(dc) + ": recomputed optimum S3=" + str(r.s3) + " != listed " +
                        str(expected[dc - 3]) + "; ";
        }
        if (dc == 3) {
            const std::uint64_t s4 = compute_spectrum(ctx, CoeffSet{6, r.exponents}, 4).at(4);
            require(s4 == 68, "S4 of the best dc=3 set != 68");
        }
    }
    for (const auto& row : golden_records()) {
        if (row.q != 64) continue;
        const std::uint64_t s3 = s3_fast(T, make_coeff_set(6, row.exponents));
        if (s3 != expected[row.dc - 3]) {
            problems += "published dc=" + str(row.dc) + " set scores " + str(s3) + " != listed " +
                        str(expected[row.dc - 3]) + "; ";
        }
    }
    require(problems.empty(),
            problems + "(the dc=3 reference value 0 is a misprint: enumeration of all 1081 "
                       "admissible sets, cross-checked by brute-force codeword counting, gives "
                       "an optimum of S3=3, reached exactly by the translates of the published "
                       "set {1,16,42}, whose S4=68 does match)");
}

// ---- criterion 6: GF(128) spot reproduction -----------------------------------

void criterion_gf128() {
    const FieldContext& ctx = fx.field(7);
    const Weight3Tables& T = fx.table(7);
    const SearchReport r = exhaustive(ctx, T, 4);
    require(r.s3 == 4, "GF(128) dc=4 exhaustive optimum != 4");
    bool saw_dc8 = false;
    bool saw_dc18 = false;
    for (const auto& row : golden_records()) {
        if (row.q != 128 || row.advisory) continue;
        const std::uint64_t s3 = s3_fast(T, make_coeff_set(7, row.exponents));
        require(s3 == row.s3, "GF(128) dc=" + str(row.dc) + " published set scores " + str(s3) +
                                  " != " + str(row.s3));
        saw_dc8 = saw_dc8 || (row.dc == 8 && row.s3 == 157);
        saw_dc18 = saw_dc18 || (row.dc == 18 && row.s3 == 2604);
    }
    require(saw_dc8 && saw_dc18, "expected the dc=8 (157) and dc=18 (2604) rows");
}

// ---- criterion 7: GF(256) golden scoring --------------------------------------

void criterion_gf256() {
    const FieldContext& ctx = fx.field(8);
    const Weight3Tables& T = fx.table(8);
    bool saw_dc12 = false;
    bool saw_dc20 = false;
    for (const auto& row : golden_records()) {
        if (row.q != 256 || row.advisory) continue;
        const std::uint64_t s3 = s3_fast(T, make_coeff_set(8, row.exponents));
        require(s3 == row.s3, "GF(256) dc=" + str(row.dc) + " published set scores " + str(s3) +
                                  " != " + str(row.s3));
        saw_dc12 = saw_dc12 || (row.dc == 12 && row.s3 == 371);
        saw_dc20 = saw_dc20 || (row.dc == 20 && row.s3 == 2473);
    }
    require(saw_dc12 && saw_dc20, "expected the dc=12 (371) and dc=20 (2473) rows");

    const Spectrum s = compute_spectrum(ctx, make_coeff_set(8, {0, 8, 172, 183}), 4);
    require(s.at(2) == 0 && s.at(3) == 0 && s.at(4) == 156,
            "spectrum of {0,8,172,183}: expected S2=0, S3=0, S4=156, got S2=" + str(s.at(2)) +
                ", S3=" + str(s.at(3)) + ", S4=" + str(s.at(4)));
}

// ---- criterion 8: sampled statistics ------------------------------------------

void criterion_stats() {
    const StatsResult s256 = estimate_stats(fx.field(8), fx.table(8), 12, 20000, kSeed);
    require(std::abs(s256.m3 - 564.9) <= 0.01 * 564.9,
            "GF(256) dc=12 M3=" + str(s256.m3) + " not within 1% of 564.9");

    const StatsResult s64 = estimate_stats(fx.field(6), fx.table(6), 10, 20000, kSeed);
    require(std::abs(s64.m3 - 560.9) <= 0.01 * 560.9,
            "GF(64) dc=10 M3=" + str(s64.m3) + " not within 1% of 560.9");

    require(std::abs(s256.sigma3 - 10.2) <= 0.15 * 10.2,
            "GF(256) dc=12 sigma3=" + str(s256.sigma3) +
                " not within 15% of the listed 10.2. (The listed sigma3/delta3 pair for this row "
                "is swapped: an independent rejection sampler agrees with this sampler on "
                "sigma3=19.0, which is the row's printed delta3, and (564.9-371)/19.0 = 10.2 "
                "reproduces the row's printed sigma3. Both samplers also reproduce the exact "
                "enumerated population statistics on GF(64) and the printed sigma3/delta3 of the "
                "GF(512)/GF(1024) rows, where the columns are not swapped.)");
}

// ---- criterion 9: heuristic quality band --------------------------------------

void criterion_greedy_quality() {
    GreedyOptions opt5;
    opt5.attempts = 5000;
    opt5.seed = kSeed;
    const SearchReport r5 = repeated_greedy(fx.field(8), fx.table(8), 5, opt5);
    require(r5.s3 == 3, "GF(256) dc=5 greedy (Ng=5000) found S3=" + str(r5.s3) + ", expected 3");

    GreedyOptions opt12;
    opt12.attempts = 20000;
    opt12.seed = kSeed;
    const SearchReport r12 = repeated_greedy(fx.field(8), fx.table(8), 12, opt12);
    require(r12.s3 <= 400, "GF(256) dc=12 greedy (Ng=20000) found S3=" + str(r12.s3) + " > 400");

    // slow-suite: GF(512) dc=7 with a reduced restart count and cached tables
    const fs::path cache =
        fs::temp_directory_path() / ("nbpc_acc_gf512_" + std::to_string(::getpid()) + ".nbt3");
    save_tables(fx.table(9), cache);
    const Weight3Tables cached = load_or_build(fx.field(9), cache);
    GreedyOptions opt7;
    opt7.attempts = 500;
    opt7.seed = kSeed;
    const SearchReport r7 = repeated_greedy(fx.field(9), cached, 7, opt7);
    fs::remove(cache);
    require(r7.s3 <= 10, "GF(512) dc=7 greedy (Ng=500) found S3=" + str(r7.s3) + " > 10");
}

// ---- criterion 10: cost contract ----------------------------------------------

void criterion_cost_contract() {
    SplitMix64 rng{mix64(kSeed + 10)};
    const Weight3Tables& T = fx.table(8);
    for (int dc : {2, 3, 4, 7, 12, 16, 20}) {
        const CoeffSet H = nbpc::test::random_set(rng, 8, dc);
        std::uint64_t reads = 0;
        s3_fast(T, H, &reads);
        const std::uint64_t expected = static_cast<std::uint64_t>(dc) * (dc - 1) * (dc + 1) / 6;
        require(reads == expected, "s3_fast made " + str(reads) + " reads at dc=" + str(dc) +
                                       ", expected " + str(expected));
        if (dc == 20) require(reads == 1330, "C(20) != 1330");
    }
}

// ---- criterion 11: sampler uniformity ------------------------------------------

void criterion_sampler_uniformity() {
    const auto sets = nbpc::test::all_admissible_sets(5, 4);
    require(sets.size() == 364, "expected 364 admissible sets for (m=5, dc=4)");
    std::map<std::vector<int>, std::uint64_t> counts;
    for (const auto& s : sets) counts[s] = 0;

    GammaTable gamma(5);
    const SamplerConfig cfg = make_sampler_config(5, 4, gamma, kSeed);
    const FieldContext& ctx = fx.field(5);
    const std::uint64_t draws = 364000;
    for (std::uint64_t k = 0; k < draws; ++k) {
        const CoeffSet h = sample_uniform(cfg, k);
        require(s2_is_zero(ctx, h), "draw fails the admissibility test");
        auto it = counts.find(h.exponents);
        require(it != counts.end(), "draw is not one of the 364 admissible sets");
        ++it->second;
    }
    const double expected = static_cast<double>(draws) / 364.0;
    double chi2 = 0;
    for (const auto& [set, count] : counts) {
        const double d = static_cast<double>(count) - expected;
        chi2 += d * d / expected;
    }
    const double critical = nbpc::test::chi2_critical(363, nbpc::test::kZ999);
    require(chi2 < critical, "chi-square " + str(chi2) + " exceeds the 1e-3 critical value " +
                                 str(critical));
}

// ---- criterion 12: table persistence -------------------------------------------

void criterion_persistence() {
    const fs::path dir = fs::temp_directory_path();
    const fs::path first = dir / ("nbpc_acc_a_" + std::to_string(::getpid()) + ".nbt3");
    const fs::path second = dir / ("nbpc_acc_b_" + std::to_string(::getpid()) + ".nbt3");

    const Weight3Tables& T = fx.table(6);
    save_tables(T, first);
    const Weight3Tables loaded = load_tables(first);
    require(loaded.t2 == T.t2 && loaded.t3 == T.t3 && loaded.m == T.m &&
                loaded.primitive_poly == T.primitive_poly,
            "reloaded tables differ");
    save_tables(loaded, second);

    auto bytes = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    };
    const std::string b1 = bytes(first);
    require(b1 == bytes(second), "round trip is not byte-identical");

    require(load_or_build(fx.field(6), first).t3 == T.t3, "load_or_build did not reuse the cache");
    bool rejected = false;
    try {
        load_or_build(fx.field(7), first);
    } catch (const integrity_error&) {
        rejected = true;
    }
    require(rejected, "cache for a different field was accepted");

    std::string corrupt = b1;
    corrupt[0] = 'Z';
    {
        std::ofstream out(first, std::ios::binary | std::ios::trunc);
        out.write(corrupt.data(), static_cast<std::streamsize>(corrupt.size()));
    }
    rejected = false;
    try {
        load_tables(first);
    } catch (const integrity_error&) {
        rejected = true;
    }
    require(rejected, "corrupted magic was accepted");

    corrupt = b1;
    corrupt[4] = 9;  // version
    {
        std::ofstream out(first, std::ios::binary | std::ios::trunc);
        out.write(corrupt.data(), static_cast<std::streamsize>(corrupt.size()));
    }
    rejected = false;
    try {
        load_tables(first);
    } catch (const integrity_error&) {
        rejected = true;
    }
    require(rejected, "unsupported version was accepted");

    fs::remove(first);
    fs::remove(second);
}

struct Criterion {
    int id;
    const char* name;
    std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 3 && std::string(argv[1]) == "--criterion") only = std::atoi(argv[2]);

    const std::vector<Criterion> criteria{
        {1, "oracle equivalence (spectrum DP vs brute force vs tables, GF(8)/GF(16))",
         criterion_oracle_equivalence},
        {2, "pair separation rule and vanishing S1 (GF(8)/GF(16)/GF(64))", criterion_pair_scan},
        {3, "gap-count table: published grid, closed form, direct enumeration",
         criterion_gamma_table},
        {4, "admissible-set counts: xi_5(4)=364, xi_8(20)=2.39e22, visit counters",
         criterion_xi},
        {5, "GF(64) exhaustive reproduction (dc=3..10)", criterion_gf64_exhaustive},
        {6, "GF(128) reproduction: exhaustive dc=4 and published-set scoring", criterion_gf128},
        {7, "GF(256) published-set scoring and {0,8,172,183} spectrum", criterion_gf256},
        {8, "sampled S3 statistics (GF(256) dc=12, GF(64) dc=10; seed 1)", criterion_stats},
        {9, "greedy quality band (GF(256) dc=5/dc=12; GF(512) dc=7 slow; seed 1)",
         criterion_greedy_quality},
        {10, "cost contract: s3_fast reads exactly (dc^3 - dc)/6 table cells",
         criterion_cost_contract},
        {11, "sampler uniformity: chi-square over the 364 sets of (m=5, dc=4)",
         criterion_sampler_uniformity},
        {12, "table cache persistence and validation", criterion_persistence},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.run();
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.message;
            ++failures;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string("unexpected error: ") + e.what();
            ++failures;
        }
        std::printf("[%2d] %s  %s%s%s\n", c.id, verdict.c_str(), c.name,
                    detail.empty() ? "" : " — ", detail.c_str());
        std::fflush(stdout);
    }
    if (failures) {
        std::printf("acceptance: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
