#include "polynomial.hpp"

#include <algorithm>

#include "error.hpp"

namespace apxalg {

polynomial::polynomial(std::vector<rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

polynomial polynomial::constant(rational c) {
    polynomial p;
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

polynomial polynomial::monomial(rational coeff, std::size_t deg) {
    polynomial p;
    if (!coeff.is_zero()) {
        p.c_.assign(deg + 1, rational(0));
        p.c_[deg] = std::move(coeff);
    }
    return p;
}

polynomial polynomial::linear_root(const rational& z) {
    polynomial p;
    p.c_ = {-z, rational(1)};
    return p;
}

bool polynomial::is_one() const { return c_.size() == 1 && c_[0] == rational(1); }

std::optional<std::size_t> polynomial::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

std::size_t polynomial::deg() const {
    if (c_.empty()) throw internal_error("degree of the zero polynomial");
    return c_.size() - 1;
}

const rational& polynomial::leading() const {
    if (c_.empty()) throw internal_error("leading coefficient of the zero polynomial");
    return c_.back();
}

rational polynomial::eval(const rational& x) const {
    rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

polynomial polynomial::operator-() const {
    polynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

polynomial& polynomial::operator+=(const polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

polynomial& polynomial::operator-=(const polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

polynomial operator*(const polynomial& a, const polynomial& b) {
    if (a.is_zero() || b.is_zero()) return polynomial();
    polynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

polynomial operator*(const polynomial& a, const rational& s) {
    if (s.is_zero()) return polynomial();
    polynomial r(a);
    for (auto& c : r.c_) c *= s;
    return r;
}

std::pair<polynomial, polynomial> polynomial::divrem(const polynomial& a, const polynomial& b) {
    if (b.is_zero()) throw usage_error("polynomial division by zero");
    if (a.is_zero() || a.deg() < b.deg()) return {polynomial(), a};
    std::vector<rational> rem = a.c_;
    const std::size_t db = b.deg();
    const rational& lead = b.c_[db];
    std::vector<rational> quot(a.deg() - db + 1, rational(0));
    for (std::size_t top = rem.size() - 1; top >= db; --top) {
        if (!rem[top].is_zero()) {
            const rational q = rem[top] / lead;
            quot[top - db] = q;
            for (std::size_t j = 0; j < db; ++j) rem[top - db + j] -= q * b.c_[j];
            rem[top] = rational(0);
        }
        if (top == db) break;
    }
    rem.resize(db);
    return {polynomial(std::move(quot)), polynomial(std::move(rem))};
}

polynomial polynomial::div_exact(const polynomial& a, const polynomial& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw internal_error("expected exact polynomial division, remainder " + r.str());
    return q;
}

polynomial polynomial::gcd(polynomial a, polynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = r.is_zero() ? polynomial() : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

polynomial polynomial::pow(std::uint64_t e) const {
    polynomial base(*this), acc = polynomial::one();
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

polynomial polynomial::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    polynomial r;
    r.c_.assign(c_.size() + k, rational(0));
    std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

polynomial polynomial::monic() const {
    if (is_zero()) throw internal_error("monic of the zero polynomial");
    if (leading() == rational(1)) return *this;
    polynomial r(*this);
    const rational inv = rational(1) / leading();
    for (auto& c : r.c_) c *= inv;
    return r;
}

std::string polynomial::str(const char* var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const rational& c = c_[i];
        if (c.is_zero()) continue;
        const bool first = out.empty();
        if (!first) out += c.sign() < 0 ? " - " : " + ";
        rational mag = (!first && c.sign() < 0) ? -c : c;
        const bool unit = mag == rational(1) && i > 0;
        if (!unit) out += mag.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace apxalg
