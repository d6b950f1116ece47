#ifndef APXALG_POLYNOMIAL_HPP
#define APXALG_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace apxalg {

// Dense univariate polynomial over the rationals, lowest degree first.
// The zero polynomial is the empty coefficient vector; its degree is the
// nullopt sentinel, never -1 arithmetic.
class polynomial {
  public:
    polynomial() = default;
    explicit polynomial(std::vector<rational> coeffs);

    static polynomial constant(rational c);
    static polynomial one() { return constant(rational(1)); }
    static polynomial monomial(rational coeff, std::size_t deg);
    // x - z
    static polynomial linear_root(const rational& z);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const { return c_.size() <= 1; }
    std::optional<std::size_t> degree() const;
    // degree of a known-nonzero polynomial
    std::size_t deg() const;

    const std::vector<rational>& coeffs() const { return c_; }
    rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : rational(0); }
    const rational& leading() const;

    rational eval(const rational& x) const;

    polynomial operator-() const;
    polynomial& operator+=(const polynomial& o);
    polynomial& operator-=(const polynomial& o);
    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
    friend polynomial operator*(const polynomial& a, const polynomial& b);
    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }
    friend polynomial operator*(const polynomial& a, const rational& s);

    friend bool operator==(const polynomial& a, const polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const polynomial& a, const polynomial& b) { return !(a == b); }

    // (quotient, remainder) with deg r < deg b; exact rational arithmetic.
    // Throws usage_error when b is zero.
    static std::pair<polynomial, polynomial> divrem(const polynomial& a, const polynomial& b);
    // Exact division; throws internal_error when the remainder is nonzero.
    static polynomial div_exact(const polynomial& a, const polynomial& b);
    // Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
    static polynomial gcd(polynomial a, polynomial b);

    polynomial pow(std::uint64_t e) const;
    polynomial shifted(std::size_t k) const;  // * x^k
    polynomial monic() const;

    std::string str(const char* var = "x") const;

  private:
    void trim();
    std::vector<rational> c_;
};

}  // namespace apxalg

#endif
