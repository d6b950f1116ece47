#include "doctest.h"

#include <cstdint>

#include "divisor.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "point.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

using apxalg::coefficient_rule;
using apxalg::formal_divisor;
using apxalg::point_or_infinity;
using apxalg::point_set;
using apxalg::polynomial;
using apxalg::rational;
using apxalg::rational_function;

namespace {

formal_divisor chen_divisor() {
    return formal_divisor(point_set::integers(),
                          coefficient_rule::geometric(rational(1), rational(1, 2)));
}

formal_divisor harmonic_divisor() {
    return formal_divisor(point_set::integers(), coefficient_rule::harmonic());
}

formal_divisor finite_divisor_preset(long d) {
    return formal_divisor(point_set::from_list({rational(0)}),
                          coefficient_rule::finite_table({rational(d)}));
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("pole polynomial multiplies out the floor divisor") {
    // floor(2 D_chen) = 2[z0] + 1[z1], so P_2 = x^2 (x - 1)
    const polynomial p2 = apxalg::pole_polynomial(chen_divisor(), 2);
    CHECK(p2 == polynomial::monomial(rational(1), 2) * polynomial::linear_root(rational(1)));
    CHECK(p2.deg() == 3);
    CHECK(apxalg::pole_polynomial(chen_divisor(), 0) == polynomial::one());
}

TEST_CASE("explicit basis spans x^j / P_n") {
    const auto basis = apxalg::oracle_basis(chen_divisor(), 2);
    REQUIRE(basis.elements.size() == 4);  // J(2)+1
    CHECK(basis.level == 2);
    // every element really lies in the piece, per the membership predicate
    for (const auto& f : basis.elements) CHECK(apxalg::membership(f, chen_divisor(), 2));
}

TEST_CASE("oracle dimension equals the closed form on every preset") {
    const formal_divisor presets[] = {chen_divisor(), harmonic_divisor(),
                                      finite_divisor_preset(3)};
    for (const auto& d : presets)
        for (std::uint64_t n = 0; n <= 8; ++n)
            CHECK(apxalg::oracle_dim(d, n) ==
                  static_cast<std::uint64_t>(d.floor_degree(n)) + 1);
}

TEST_CASE("frozen small dimensions, including the harmonic n=3 value") {
    CHECK(apxalg::oracle_dim(chen_divisor(), 4) == 8);
    CHECK(apxalg::oracle_dim(chen_divisor(), 5) == 9);
    // J_h(3) = 3 + 1 + 1 = 5, so the piece has dimension 6
    CHECK(apxalg::oracle_dim(harmonic_divisor(), 3) == 6);
    CHECK(apxalg::oracle_dim(finite_divisor_preset(2), 5) == 11);
}

TEST_CASE("image of n-fold products matches n*J(p)+1") {
    CHECK(apxalg::oracle_image_dim(chen_divisor(), 2, 2) == 7);
    CHECK(apxalg::oracle_image_dim(chen_divisor(), 4, 2) == 15);
    CHECK(apxalg::oracle_image_dim(harmonic_divisor(), 2, 2) == 7);
    CHECK(apxalg::oracle_image_dim(harmonic_divisor(), 4, 2, 20) == 17);
    CHECK(apxalg::oracle_image_dim(finite_divisor_preset(2), 3, 3, 12) == 19);
    CHECK(apxalg::oracle_image_dim(chen_divisor(), 1, 1) == 2);
}

TEST_CASE("membership separates the piece from its complement") {
    const formal_divisor d = chen_divisor();
    const rational_function one(rational(1));
    const rational_function x(polynomial::monomial(rational(1), 1));
    CHECK(apxalg::membership(one, d, 2));
    CHECK(apxalg::membership(one / (x * x), d, 2));             // pole of order 2 at 0: allowed
    CHECK_FALSE(apxalg::membership(one / (x * x * x), d, 2));   // order 3 at 0: too deep
    CHECK_FALSE(apxalg::membership(x * x * x * x, d, 2));       // numerator degree 4 > J(2)
    const rational_function at_two =
        one / rational_function(polynomial::linear_root(rational(2)));
    CHECK_FALSE(apxalg::membership(at_two, d, 2));  // z2 not yet in floor(2D)
    CHECK(apxalg::membership(at_two, d, 4));        // floor(4D) picks up z2
    CHECK_THROWS_AS(apxalg::membership(rational_function(), d, 2), apxalg::usage_error);
}

TEST_CASE("minimum order over the basis matches -floor(n a_q)") {
    const formal_divisor d = chen_divisor();
    CHECK(apxalg::oracle_min_order(d, 4, rational(0)) == -4);
    CHECK(apxalg::oracle_min_order(d, 4, rational(1)) == -2);
    CHECK(apxalg::oracle_min_order(d, 4, rational(2)) == -1);
    CHECK(apxalg::oracle_min_order(d, 4, rational(3)) == 0);
    CHECK(apxalg::oracle_min_order(d, 4, point_or_infinity::infinity()) == 0);
    CHECK(apxalg::oracle_min_order(harmonic_divisor(), 6, rational(1)) == -3);
}

TEST_CASE("cap is enforced and adjustable") {
    CHECK_THROWS_WITH_AS(apxalg::oracle_dim(chen_divisor(), 13),
                         doctest::Contains("exceeds the oracle cap"), apxalg::usage_error);
    CHECK(apxalg::oracle_dim(chen_divisor(), 13, 13) == 24);  // J(13) = 13+6+3+1 = 23
    CHECK_THROWS_AS(apxalg::oracle_image_dim(chen_divisor(), 5, 4), apxalg::usage_error);
    CHECK(apxalg::oracle_image_dim(chen_divisor(), 5, 4, 20) == 33);
    CHECK_THROWS_AS(apxalg::oracle_image_dim(chen_divisor(), 0, 1), apxalg::usage_error);
}

}  // TEST_SUITE
