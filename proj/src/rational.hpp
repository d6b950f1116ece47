#ifndef APXALG_RATIONAL_HPP
#define APXALG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace apxalg {

using integer = mpz_class;

// Exact rational scalar.  Always canonical: lowest terms, denominator > 0.
// No floating point enters or leaves except through approx(), which is
// display-only.
class rational {
  public:
    rational() : v_(0) {}
    rational(int n) : v_(n) {}
    rational(long n) : v_(n) {}
    rational(long long n) : v_(static_cast<long>(n)) {}
    rational(unsigned long n) : v_(n) {}
    rational(const integer& n) : v_(n) {}
    rational(const integer& num, const integer& den);
    rational(long num, long den);

    rational(double) = delete;
    rational(float) = delete;

    // Parses "p", "p/q" or "-p/q" with arbitrary-precision parts.
    // Decimal points are rejected: this library never rounds.
    static rational parse(const std::string& text);

    integer num() const { return v_.get_num(); }
    integer den() const { return v_.get_den(); }
    mpq_srcptr raw() const { return v_.get_mpq_t(); }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_integer() const { return mpz_cmp_ui(v_.get_den().get_mpz_t(), 1) == 0; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    integer floor() const;

    rational operator-() const;
    rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
    rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
    rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
    rational& operator/=(const rational& o);

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    friend bool operator==(const rational& a, const rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const rational& a, const rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const rational& a, const rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const rational& a, const rational& b) { return cmp(a.v_, b.v_) >= 0; }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    // Display-only decimal approximation; never feeds back into arithmetic.
    double approx() const { return v_.get_d(); }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const rational& r);

}  // namespace apxalg

#endif
