#include "rational.hpp"

#include <cctype>
#include <ostream>

#include "error.hpp"

namespace apxalg {

rational::rational(const integer& num, const integer& den) {
    if (mpz_sgn(den.get_mpz_t()) == 0)
        throw usage_error("rational: zero denominator");
    mpq_set_num(v_.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(v_.get_mpq_t(), den.get_mpz_t());
    mpq_canonicalize(v_.get_mpq_t());
}

rational::rational(long num, long den) : rational(integer(num), integer(den)) {}

rational& rational::operator/=(const rational& o) {
    if (o.is_zero()) throw usage_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

rational rational::operator-() const {
    rational r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

integer rational::floor() const {
    integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// digits with one optional leading sign
bool signed_digits(const std::string& s) {
    if (s.empty()) return false;
    if (s[0] == '-' || s[0] == '+') return all_digits(s.substr(1));
    return all_digits(s);
}

}  // namespace

rational rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!signed_digits(num_part) || !signed_digits(den_part))
        throw validation_error("not an exact rational: \"" + text +
                               "\" (expected \"p\" or \"p/q\", no decimals)");
    integer n(num_part), d(den_part);
    if (mpz_sgn(d.get_mpz_t()) == 0)
        throw validation_error("zero denominator in \"" + text + "\"");
    return rational(n, d);
}

std::string rational::str() const {
    std::string s = v_.get_num().get_str();
    if (!is_integer()) {
        s += '/';
        s += v_.get_den().get_str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

}  // namespace apxalg
