#ifndef APXALG_RATIONAL_FUNCTION_HPP
#define APXALG_RATIONAL_FUNCTION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "divisor.hpp"
#include "point.hpp"
#include "polynomial.hpp"

namespace apxalg {

// Element of the rational function field Q(x), kept reduced: numerator and
// denominator coprime, denominator monic and nonzero.
class rational_function {
  public:
    rational_function() : den_(polynomial::one()) {}  // zero
    rational_function(polynomial num, polynomial den);
    explicit rational_function(polynomial num) : num_(std::move(num)), den_(polynomial::one()) {}
    explicit rational_function(const rational& c) : rational_function(polynomial::constant(c)) {}

    const polynomial& num() const { return num_; }
    const polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    // order of vanishing at a place; throws usage_error on the zero function
    std::int64_t ord_at(const point_or_infinity& q) const;

    rational_function operator-() const;
    friend rational_function operator+(const rational_function& a, const rational_function& b);
    friend rational_function operator-(const rational_function& a, const rational_function& b);
    friend rational_function operator*(const rational_function& a, const rational_function& b);
    // throws usage_error when b is zero
    friend rational_function operator/(const rational_function& a, const rational_function& b);
    rational_function& operator+=(const rational_function& o) { return *this = *this + o; }
    rational_function& operator-=(const rational_function& o) { return *this = *this - o; }
    rational_function& operator*=(const rational_function& o) { return *this = *this * o; }
    rational_function& operator/=(const rational_function& o) { return *this = *this / o; }

    friend bool operator==(const rational_function& a, const rational_function& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational_function& a, const rational_function& b) {
        return !(a == b);
    }

    std::string str(const char* var = "x") const;

  private:
    polynomial num_;
    polynomial den_;
};

// Rational roots of p with multiplicities, plus the root-free cofactor
// (constant exactly when p splits into linear factors over Q).
struct linear_factorization {
    std::vector<std::pair<rational, std::uint64_t>> roots;
    polynomial rootless;
};
linear_factorization factor_rational_roots(const polynomial& p);

// The divisor of zeros and poles of f, infinity included; always of total
// degree zero.  Requires numerator and denominator to split into rational
// linear factors; throws usage_error naming the non-splitting factor
// otherwise.
finite_divisor principal_divisor(const rational_function& f);

}  // namespace apxalg

#endif
