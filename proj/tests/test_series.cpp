#include "doctest.h"

#include <cstdint>
#include <utility>
#include <vector>

#include "divisor.hpp"
#include "error.hpp"
#include "point.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rational_function.hpp"
#include "series.hpp"

using apxalg::coefficient_rule;
using apxalg::deficiency_check;
using apxalg::formal_divisor;
using apxalg::graded_series;
using apxalg::point_or_infinity;
using apxalg::point_set;
using apxalg::polynomial;
using apxalg::rational;
using apxalg::rational_function;

namespace {

rational_function one() { return rational_function(rational(1)); }

graded_series chen_series() {
    return graded_series(
        formal_divisor(point_set::integers(),
                       coefficient_rule::geometric(rational(1), rational(1, 2))),
        one());
}

graded_series harmonic_series() {
    return graded_series(formal_divisor(point_set::integers(), coefficient_rule::harmonic()),
                         one());
}

graded_series finite_series(long d) {
    return graded_series(formal_divisor(point_set::from_list({rational(0)}),
                                        coefficient_rule::finite_table({rational(d)})),
                         one());
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("b1 is validated against piece 1") {
    const formal_divisor d(point_set::integers(),
                           coefficient_rule::geometric(rational(1), rational(1, 2)));
    CHECK_THROWS_AS(graded_series(d, rational_function()), apxalg::validation_error);
    // x has a pole at infinity of order 1 > 0 = allowance, so it is outside
    const rational_function x(polynomial::monomial(rational(1), 1));
    CHECK_THROWS_AS(graded_series(d, x), apxalg::validation_error);
    // 1/x uses exactly the allowed pole at z0
    CHECK_NOTHROW(graded_series(d, one() / x));
}

TEST_CASE("piece and image dimensions, exact ratios") {
    const graded_series s = chen_series();
    CHECK(s.dim_piece(8) == 16);
    CHECK(s.dim_piece(1) == 2);
    CHECK(s.image_dim(4, 2) == 15);
    CHECK(s.approx_ratio(4, 2) == rational(15, 16));
    CHECK(s.approx_ratio(16, 2) == rational(63, 64));

    const graded_series h = harmonic_series();
    CHECK(h.dim_piece(8) == 21);  // J_h(8) = 8+4+2+2+1+1+1+1 = 20
    CHECK(h.image_dim(4, 2) == 17);
    CHECK(h.approx_ratio(4, 2) == rational(17, 21));

    CHECK_THROWS_AS(s.image_dim(0, 1), apxalg::usage_error);
    CHECK_THROWS_AS(s.approx_ratio(1, 0), apxalg::usage_error);
}

TEST_CASE("approximation ratio never exceeds one (superadditivity)") {
    for (const graded_series& s : {chen_series(), harmonic_series(), finite_series(3)})
        for (std::uint64_t p = 1; p <= 6; ++p)
            for (std::uint64_t n = 1; n <= 6; ++n)
                CHECK(s.approx_ratio(p, n) <= rational(1));
}

TEST_CASE("certify: the halving divisor clears epsilon = 1/16 at large p") {
    const auto rep = chen_series().certify_approximable(rational(1, 16), {16, 32}, 200);
    CHECK(rep.certified);
    CHECK(rep.certified_from_p == 16u);
    CHECK_FALSE(rep.refuted_at.has_value());
    REQUIRE(rep.entries.size() == 2);
    CHECK(rep.entries[0].p == 16);
    CHECK(rep.entries[0].min_ratio >= rational(31, 32));
    CHECK(rep.entries[0].min_ratio > rational(1) - rational(1, 16));
    // the deficiency column rides along for this divisor
    REQUIRE(rep.entries[0].deficiency.has_value());
    CHECK(*rep.entries[0].deficiency == 1);  // J(16) = 31, so 32 - 31
}

TEST_CASE("certify: a failing small p still certifies from the passing suffix") {
    const auto rep = chen_series().certify_approximable(rational(1, 16), {1, 16}, 50);
    CHECK(rep.certified);
    CHECK(rep.certified_from_p == 16u);
    REQUIRE(rep.entries.size() == 2);
    CHECK(rep.entries[0].min_ratio <= rational(1) - rational(1, 16));
}

TEST_CASE("certify: harmonic growth refutes epsilon = 1/2 at p = 4") {
    const auto rep = harmonic_series().certify_approximable(rational(1, 2), {4}, 64);
    CHECK_FALSE(rep.certified);
    CHECK_FALSE(rep.certified_from_p.has_value());
    REQUIRE(rep.refuted_at.has_value());
    CHECK(rep.refuted_at->first == 4);
    CHECK(rep.refuted_at->second == 64);  // ratios only fall as n grows
    CHECK(rep.entries[0].min_ratio < rational(1, 2));
    CHECK_FALSE(rep.entries[0].deficiency.has_value());
}

TEST_CASE("certify: duplicate and unsorted p lists are normalized") {
    const auto rep = chen_series().certify_approximable(rational(1, 4), {8, 2, 8, 4}, 16);
    REQUIRE(rep.entries.size() == 3);
    CHECK(rep.entries[0].p == 2);
    CHECK(rep.entries[1].p == 4);
    CHECK(rep.entries[2].p == 8);
}

TEST_CASE("certify: threading does not change the result") {
    const auto a = harmonic_series().certify_approximable(rational(1, 3), {2, 4, 8}, 200, 1);
    const auto b = harmonic_series().certify_approximable(rational(1, 3), {2, 4, 8}, 200, 4);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].min_ratio == b.entries[i].min_ratio);
        CHECK(a.entries[i].min_ratio_n == b.entries[i].min_ratio_n);
    }
    CHECK(a.certified == b.certified);
}

TEST_CASE("certify: parameter validation") {
    CHECK_THROWS_AS(chen_series().certify_approximable(rational(0), {2}, 8),
                    apxalg::usage_error);
    CHECK_THROWS_AS(chen_series().certify_approximable(rational(1), {2}, 8),
                    apxalg::usage_error);
    CHECK_THROWS_AS(chen_series().certify_approximable(rational(1, 2), {}, 8),
                    apxalg::usage_error);
    CHECK_THROWS_AS(chen_series().certify_approximable(rational(1, 2), {2}, 0),
                    apxalg::usage_error);
    CHECK_THROWS_AS(chen_series().certify_approximable(rational(1, 2), {0, 2}, 8),
                    apxalg::usage_error);
}

TEST_CASE("deficiency: frozen values and both bounds") {
    const auto r2 = deficiency_check(2);
    CHECK(r2.deficiency == 1);  // J(2) = 3
    CHECK(r2.ok());
    const auto r100 = deficiency_check(100);
    CHECK(r100.deficiency == 3);  // J(100) = 197
    CHECK(r100.ok());
    // powers of two are the tight spots: 2p - J(p) = 1
    for (unsigned k = 1; k <= 20; ++k) CHECK(deficiency_check(1ull << k).deficiency == 1);
    // worst cases are p = 2^k - 1 where every halving step rounds down:
    // J(2^k - 1) = 2^(k+1) - 2 - k, so the deficiency is exactly k
    CHECK(deficiency_check(1023).deficiency == 10);
    CHECK(deficiency_check(1023).ok());
    CHECK_THROWS_AS(deficiency_check(1), apxalg::usage_error);
}

TEST_CASE("volume sequence: exactly 2 at powers of two, (dn+1)/n on finite presets") {
    const auto chen = chen_series().volume_sequence({1, 2, 3, 4, 1024});
    CHECK(chen[0].second == rational(2));
    CHECK(chen[1].second == rational(2));
    CHECK(chen[2].second == rational(5, 3));
    CHECK(chen[3].second == rational(2));
    CHECK(chen[4].second == rational(2));
    const auto fin = finite_series(2).volume_sequence({1, 7, 100});
    CHECK(fin[0].second == rational(3));
    CHECK(fin[1].second == rational(15, 7));
    CHECK(fin[2].second == rational(201, 100));
}

TEST_CASE("negative-valuation support: the halving divisor spreads out") {
    const graded_series s = chen_series();
    const auto at5 = s.neg_valuation_support(5);
    REQUIRE(at5.size() == 3);
    CHECK(at5[0] == point_or_infinity(rational(0)));
    CHECK(at5[1] == point_or_infinity(rational(1)));
    CHECK(at5[2] == point_or_infinity(rational(2)));
    CHECK(s.neg_valuation_support(1).size() == 1);
    CHECK(s.neg_valuation_support(1024).size() == 11);

    const auto growth = s.support_growth(16);
    REQUIRE(growth.size() == 16);
    for (const auto& [n, count] : growth) {
        std::uint64_t expect = 0;
        for (std::uint64_t v = n; v > 0; v >>= 1) ++expect;  // floor(log2 n) + 1
        CHECK(count == expect);
    }
}

TEST_CASE("negative-valuation support: finite presets stay put") {
    const graded_series s = finite_series(2);
    for (const auto& [n, count] : s.support_growth(100)) {
        (void)n;
        CHECK(count == 1);
    }
    const auto at7 = s.neg_valuation_support(7);
    REQUIRE(at7.size() == 1);
    CHECK(at7[0] == point_or_infinity(rational(0)));
}

TEST_CASE("a nontrivial b1 shifts the witness by its valuations") {
    // b1 = 1/x cancels z0 (coefficient 1 + ord -1 = 0) and puts weight at
    // infinity (ord 1 > 0), so infinity qualifies from n = 1 on
    const formal_divisor d(point_set::integers(),
                           coefficient_rule::geometric(rational(1), rational(1, 2)));
    const rational_function b1(polynomial::one(), polynomial::monomial(rational(1), 1));
    const graded_series s(d, b1);

    const auto at1 = s.neg_valuation_support(1);
    REQUIRE(at1.size() == 1);
    CHECK(at1[0].is_infinity());

    const auto at4 = s.neg_valuation_support(4);
    REQUIRE(at4.size() == 3);  // z1 (from n=2), z2 (from n=4), infinity
    CHECK(at4[0] == point_or_infinity(rational(1)));
    CHECK(at4[1] == point_or_infinity(rational(2)));
    CHECK(at4[2].is_infinity());

    const auto growth = s.support_growth(8);
    CHECK(growth[0].second == 1);  // infinity only
    CHECK(growth[1].second == 2);  // + z1
    CHECK(growth[3].second == 3);  // + z2
    CHECK(growth[7].second == 4);  // + z3
}

TEST_CASE("support growth level guard") {
    CHECK_THROWS_AS(chen_series().support_growth(0), apxalg::usage_error);
    CHECK_THROWS_AS(chen_series().neg_valuation_support(0), apxalg::usage_error);
}

}  // TEST_SUITE
