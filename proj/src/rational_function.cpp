#include "rational_function.hpp"

#include <algorithm>
#include <utility>

#include "error.hpp"

namespace apxalg {

rational_function::rational_function(polynomial num, polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw usage_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = polynomial::one();
        return;
    }
    const polynomial g = polynomial::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = polynomial::div_exact(num_, g);
        den_ = polynomial::div_exact(den_, g);
    }
    const rational lead = den_.leading();
    if (lead != rational(1)) {
        const rational inv = rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

namespace {

// multiplicity of the factor (x - q) in a nonzero polynomial
std::uint64_t root_multiplicity(polynomial p, const rational& q) {
    const polynomial lin = polynomial::linear_root(q);
    std::uint64_t mult = 0;
    while (!p.is_constant() && p.eval(q).is_zero()) {
        p = polynomial::div_exact(p, lin);
        ++mult;
    }
    return mult;
}

}  // namespace

std::int64_t rational_function::ord_at(const point_or_infinity& q) const {
    if (is_zero()) throw usage_error("the zero function has no order");
    if (q.is_infinity())
        return static_cast<std::int64_t>(den_.deg()) - static_cast<std::int64_t>(num_.deg());
    const rational& v = q.value();
    return static_cast<std::int64_t>(root_multiplicity(num_, v)) -
           static_cast<std::int64_t>(root_multiplicity(den_, v));
}

rational_function rational_function::operator-() const {
    rational_function r = *this;
    r.num_ = -r.num_;
    return r;
}

rational_function operator+(const rational_function& a, const rational_function& b) {
    return rational_function(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

rational_function operator-(const rational_function& a, const rational_function& b) {
    return rational_function(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

rational_function operator*(const rational_function& a, const rational_function& b) {
    return rational_function(a.num_ * b.num_, a.den_ * b.den_);
}

rational_function operator/(const rational_function& a, const rational_function& b) {
    if (b.is_zero()) throw usage_error("division by the zero function");
    return rational_function(a.num_ * b.den_, a.den_ * b.num_);
}

std::string rational_function::str(const char* var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

namespace {

constexpr unsigned long trial_division_limit = 1u << 20;

// prime factorization by trial division, with a primality check on the
// cofactor; desk-scale inputs only
std::vector<std::pair<integer, unsigned>> factor_integer(integer n) {
    if (mpz_sgn(n.get_mpz_t()) < 0) n = -n;
    std::vector<std::pair<integer, unsigned>> out;
    if (mpz_cmp_ui(n.get_mpz_t(), 1) <= 0) return out;
    for (unsigned long d = 2; d <= trial_division_limit; d = (d == 2 ? 3 : d + 2)) {
        if (mpz_cmp_ui(n.get_mpz_t(), d * d) < 0) break;
        if (!mpz_divisible_ui_p(n.get_mpz_t(), d)) continue;
        unsigned e = 0;
        do {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
            ++e;
        } while (mpz_divisible_ui_p(n.get_mpz_t(), d));
        out.emplace_back(integer(d), e);
    }
    if (mpz_cmp_ui(n.get_mpz_t(), 1) > 0) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw usage_error("cannot enumerate rational root candidates: large composite factor " +
                              n.get_str());
        out.emplace_back(n, 1);
    }
    return out;
}

constexpr std::size_t divisor_budget = 1 << 16;

std::vector<integer> positive_divisors(const integer& n) {
    std::vector<integer> out{integer(1)};
    for (const auto& [p, e] : factor_integer(n)) {
        const std::size_t base = out.size();
        if (base * (e + 1) > divisor_budget)
            throw usage_error("cannot enumerate rational root candidates: " + n.get_str() +
                              " has too many divisors");
        integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

// least common multiple of the coefficient denominators
integer denominator_lcm(const polynomial& p) {
    integer l = 1;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    return l;
}

}  // namespace

linear_factorization factor_rational_roots(const polynomial& p) {
    if (p.is_zero()) throw usage_error("cannot factor the zero polynomial");
    linear_factorization out;
    polynomial work = p;

    // roots at zero first: trailing low-order zero coefficients
    std::uint64_t at_zero = 0;
    while (!work.is_constant() && work.coeff(0).is_zero()) {
        work = polynomial::div_exact(work, polynomial::monomial(rational(1), 1));
        ++at_zero;
    }
    if (at_zero > 0) out.roots.emplace_back(rational(0), at_zero);
    if (work.is_constant()) {
        out.rootless = work;
        return out;
    }

    // candidates c/d with c | constant term, d | leading term of the
    // primitive integer form of work; every rational root of any factor of
    // work is of this shape
    const integer scale = denominator_lcm(work);
    const integer c0 = work.coeff(0).num() * (scale / work.coeff(0).den());
    const integer clead = work.leading().num() * (scale / work.leading().den());
    const std::vector<integer> nums = positive_divisors(c0);
    const std::vector<integer> dens = positive_divisors(clead);
    if (nums.size() * dens.size() > divisor_budget)
        throw usage_error("cannot enumerate rational root candidates: " + c0.get_str() + " and " +
                          clead.get_str() + " have too many divisor pairs");
    for (const integer& d : dens) {
        for (const integer& c : nums) {
            integer g;
            mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
            if (mpz_cmp_ui(g.get_mpz_t(), 1) != 0) continue;  // non-coprime pairs repeat
            for (const rational& cand : {rational(c, d), rational(-c, d)}) {
                const std::uint64_t mult = root_multiplicity(work, cand);
                if (mult == 0) continue;
                out.roots.emplace_back(cand, mult);
                work = polynomial::div_exact(
                    work, polynomial::linear_root(cand).pow(mult));
                if (work.is_constant()) {
                    out.rootless = work;
                    return out;
                }
            }
        }
    }
    out.rootless = work;
    return out;
}

finite_divisor principal_divisor(const rational_function& f) {
    if (f.is_zero()) throw usage_error("the zero function has no divisor");
    std::vector<std::pair<point_or_infinity, std::int64_t>> items;
    for (const bool numerator_side : {true, false}) {
        const polynomial& part = numerator_side ? f.num() : f.den();
        linear_factorization fac = factor_rational_roots(part);
        if (!fac.rootless.is_constant())
            throw usage_error("does not split over the rationals: factor " +
                              fac.rootless.str() + " has no rational root");
        const std::int64_t sign = numerator_side ? 1 : -1;
        for (const auto& [root, mult] : fac.roots)
            items.emplace_back(point_or_infinity(root), sign * static_cast<std::int64_t>(mult));
    }
    items.emplace_back(point_or_infinity::infinity(),
                       static_cast<std::int64_t>(f.den().deg()) -
                           static_cast<std::int64_t>(f.num().deg()));
    return finite_divisor::from_items(items);
}

}  // namespace apxalg
