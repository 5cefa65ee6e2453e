#include <doctest.h>

#include "nbpc/errors.hpp"
#include "nbpc/rng.hpp"
#include "nbpc/weight3.hpp"
#include "test_util.hpp"

using namespace nbpc;
using nbpc::test::random_set;

TEST_CASE("t2 matches brute force over GF(8)") {
    const FieldContext ctx = build_field(3);
    const Weight3Tables T = build_tables(ctx);
    for (int a = 0; a < 7; ++a) {
        CAPTURE(a);
        CHECK(T.t2_at(a) == brute_force_spectrum(ctx, make_coeff_set(3, {0, a})).at(3));
    }
}

TEST_CASE("weight-split build matches the spectrum-DP reference build") {
    for (int m : {3, 4, 6}) {
        const FieldContext ctx = build_field(m);
        const Weight3Tables fast = build_tables(ctx);
        const Weight3Tables ref = build_tables_reference(ctx);
        CAPTURE(m);
        REQUIRE(fast.t2 == ref.t2);
        REQUIRE(fast.t3 == ref.t3);
    }
}

TEST_CASE("t3 symmetry") {
    const FieldContext ctx = build_field(4);
    const Weight3Tables T = build_tables(ctx);
    for (int a = 0; a < 15; ++a) {
        for (int b = 0; b < 15; ++b) CHECK(T.t3_at(a, b) == T.t3_at(b, a));
    }
}

TEST_CASE("s3_fast equals the spectrum coefficient") {
    SplitMix64 rng{11};
    for (int m : {3, 4}) {
        const FieldContext ctx = build_field(m);
        const Weight3Tables T = build_tables(ctx);
        const int L = ctx.q - 1;
        for (int a = 0; a < L; ++a) {  // every pair, exhaustively
            const CoeffSet H = make_coeff_set(m, {0, a});
            CHECK(s3_fast(T, H) == compute_spectrum(ctx, H, 3).at(3));
        }
        for (int dc : {3, 4}) {
            for (int it = 0; it < 120; ++it) {
                const CoeffSet H = random_set(rng, m, dc);
                CAPTURE(m);
                CAPTURE(dc);
                CHECK(s3_fast(T, H) == compute_spectrum(ctx, H, 3).at(3));
            }
        }
    }
    // 1000 random sets over GF(64), mixed degrees
    const FieldContext gf64 = build_field(6);
    const Weight3Tables T64 = build_tables(gf64);
    for (int it = 0; it < 1000; ++it) {
        const int dc = 2 + static_cast<int>(uniform_below(rng, 9));
        const CoeffSet H = random_set(rng, 6, dc);
        CHECK(s3_fast(T64, H) == compute_spectrum(gf64, H, 3).at(3));
    }
}

TEST_CASE("published s3 values") {
    const FieldContext gf64 = build_field(6);
    const Weight3Tables T64 = build_tables(gf64);
    CHECK(s3_fast(T64, make_coeff_set(6, {0, 9, 22, 37})) == 20);
    CHECK(s3_fast(T64, make_coeff_set(6, {0, 7, 18, 44, 53})) == 51);

    const FieldContext gf128 = build_field(7);
    const Weight3Tables T128 = build_tables(gf128);
    CHECK(s3_fast(T128, make_coeff_set(7, {0, 12, 84, 101})) == 4);
}

TEST_CASE("degree-2 degenerates to a single t2 read") {
    const FieldContext ctx = build_field(4);
    const Weight3Tables T = build_tables(ctx);
    for (int a = 0; a < 15; ++a) CHECK(s3_fast(T, make_coeff_set(4, {0, a})) == T.t2_at(a));
}

TEST_CASE("cost contract: exactly C(dc) table reads") {
    const FieldContext ctx = build_field(8);
    const Weight3Tables T = build_tables(ctx);
    SplitMix64 rng{12};
    for (int dc : {2, 3, 5, 8, 12, 20}) {
        const CoeffSet H = random_set(rng, 8, dc);
        std::uint64_t reads = 0;
        s3_fast(T, H, &reads);
        const std::uint64_t expected =
            static_cast<std::uint64_t>(dc) * (dc - 1) * (dc + 1) / 6;  // C(dc)
        CAPTURE(dc);
        CHECK(reads == expected);
    }
    CHECK(20ULL * 19 * 21 / 6 == 1330);  // C(20)
}

TEST_CASE("translation invariance") {
    const FieldContext ctx = build_field(6);
    const Weight3Tables T = build_tables(ctx);
    SplitMix64 rng{13};
    for (int it = 0; it < 200; ++it) {
        const CoeffSet H = random_set(rng, 6, 4);
        const int k = static_cast<int>(uniform_below(rng, 63));
        std::vector<int> shifted;
        for (int e : H.exponents) shifted.push_back((e + k) % 63);
        CHECK(s3_fast(T, H) == s3_fast(T, make_coeff_set(6, shifted)));
    }
}

TEST_CASE("admissibility test equals a vanishing S2") {
    for (int m : {3, 4}) {
        const FieldContext ctx = build_field(m);
        for (int a = 0; a < ctx.q - 1; ++a) {
            const CoeffSet H = make_coeff_set(m, {0, a});
            CAPTURE(m);
            CAPTURE(a);
            CHECK(s2_is_zero(ctx, H) == (brute_force_spectrum(ctx, H).at(2) == 0));
        }
    }
    const FieldContext gf64 = build_field(6);
    for (int a = 0; a < 63; ++a) {
        const CoeffSet H = make_coeff_set(6, {0, a});
        CHECK(s2_is_zero(gf64, H) == (compute_spectrum(gf64, H, 2).at(2) == 0));
        CHECK(s2_is_zero(gf64, H) == (a >= 6 && a <= 57));
    }
}

TEST_CASE("s2_is_zero examples") {
    const FieldContext gf8 = build_field(3);
    CHECK(s2_is_zero(gf8, make_coeff_set(3, {0, 3})));
    CHECK(!s2_is_zero(gf8, make_coeff_set(3, {0, 2})));
    CHECK(!s2_is_zero(gf8, make_coeff_set(3, {4, 4})));  // duplicate: distance 0

    const FieldContext gf64 = build_field(6);
    CHECK(s2_is_zero(gf64, make_coeff_set(6, {0, 6, 12, 18, 24, 30, 36, 42, 48, 54})));
}

TEST_CASE("max_dc_with_s2_zero") {
    CHECK(max_dc_with_s2_zero(6) == 10);
    CHECK(max_dc_with_s2_zero(3) == 2);
    CHECK(max_dc_with_s2_zero(8) == 32);
    CHECK_THROWS_AS(max_dc_with_s2_zero(2), config_error);
}

TEST_CASE("tables are field-checked") {
    const FieldContext gf8 = build_field(3);
    const Weight3Tables T8 = build_tables(gf8);
    CHECK_THROWS_AS(s3_fast(T8, make_coeff_set(4, {0, 5})), integrity_error);
}
