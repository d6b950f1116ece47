#ifndef APXALG_ORACLE_HPP
#define APXALG_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "divisor.hpp"
#include "point.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"

namespace apxalg {

// Brute-force validation layer.  Everything here recomputes the closed
// forms of the series engine from first principles: explicit bases, exact
// product-span ranks, membership by exact division.  Slow by design, capped
// to small instances.

inline constexpr std::uint64_t oracle_default_cap = 12;

// P_n = prod (x - z_i)^{e_i} over the entries of floor(nD); degree J(n)
polynomial pole_polynomial(const formal_divisor& d, std::uint64_t n);

// graded piece n made explicit: the functions x^j / P_n for 0 <= j <= J(n)
struct explicit_basis {
    std::uint64_t level = 0;
    polynomial pole_poly;
    std::vector<rational_function> elements;
};
explicit_basis oracle_basis(const formal_divisor& d, std::uint64_t n,
                            std::uint64_t cap = oracle_default_cap);

// rank of the numerator span of the explicit basis; must equal J(n)+1
std::uint64_t oracle_dim(const formal_divisor& d, std::uint64_t n,
                         std::uint64_t cap = oracle_default_cap);

// rank of the span of all n-fold products of piece-p basis elements inside
// piece np; must equal n*J(p)+1
std::uint64_t oracle_image_dim(const formal_divisor& d, std::uint64_t p, std::uint64_t n,
                               std::uint64_t cap = oracle_default_cap);

// true iff f * P_n is a polynomial of degree <= J(n)
bool membership(const rational_function& f, const formal_divisor& d, std::uint64_t n);

// minimum of ord_at over the explicit basis of piece n, at one place;
// validates the closed form -floor(n*a_q) (and 0 at infinity)
std::int64_t oracle_min_order(const formal_divisor& d, std::uint64_t n,
                              const point_or_infinity& q,
                              std::uint64_t cap = oracle_default_cap);

}  // namespace apxalg

#endif
