#include "oracle.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "error.hpp"
#include "linalg.hpp"

namespace apxalg {

namespace {

void check_cap(std::uint64_t value, std::uint64_t cap, const char* what) {
    if (value > cap)
        throw usage_error(std::string(what) + " " + std::to_string(value) +
                          " exceeds the oracle cap " + std::to_string(cap) +
                          "; raise the cap explicitly for bigger runs");
}

// coefficient vector of a known member of piece n, relative to the pole
// polynomial: f = Q / P_n with deg Q <= J(n); returns Q padded to J(n)+1
std::vector<rational> numerator_coords(const rational_function& f, const polynomial& pole,
                                       std::size_t piece_degree) {
    const rational_function q = f * rational_function(pole);
    if (!q.is_polynomial())
        throw internal_error("element of a graded piece with a pole outside the pole polynomial");
    if (!q.num().is_zero() && q.num().deg() > piece_degree)
        throw internal_error("element of a graded piece with excess numerator degree");
    std::vector<rational> row(piece_degree + 1, rational(0));
    const auto& c = q.num().coeffs();
    std::copy(c.begin(), c.end(), row.begin());
    return row;
}

}  // namespace

polynomial pole_polynomial(const formal_divisor& d, std::uint64_t n) {
    polynomial p = polynomial::one();
    const finite_divisor fl = d.floor(n);
    for (const auto& e : fl.entries()) {
        const point_or_infinity q = fl.place_of(e);
        if (q.is_infinity() || e.coeff < 0)
            throw internal_error("floor divisor with a non-effective or infinite entry");
        p *= polynomial::linear_root(q.value()).pow(static_cast<std::uint64_t>(e.coeff));
    }
    return p;
}

explicit_basis oracle_basis(const formal_divisor& d, std::uint64_t n, std::uint64_t cap) {
    check_cap(n, cap, "piece level");
    explicit_basis b;
    b.level = n;
    b.pole_poly = pole_polynomial(d, n);
    const std::size_t j_n = b.pole_poly.is_zero() ? 0 : b.pole_poly.deg();
    const rational_function inv_pole(polynomial::one(), b.pole_poly);
    b.elements.reserve(j_n + 1);
    for (std::size_t j = 0; j <= j_n; ++j)
        b.elements.push_back(rational_function(polynomial::monomial(rational(1), j)) * inv_pole);
    return b;
}

std::uint64_t oracle_dim(const formal_divisor& d, std::uint64_t n, std::uint64_t cap) {
    const explicit_basis b = oracle_basis(d, n, cap);
    const std::size_t j_n = b.pole_poly.deg();
    std::vector<std::vector<rational>> rows;
    rows.reserve(b.elements.size());
    for (const auto& f : b.elements) rows.push_back(numerator_coords(f, b.pole_poly, j_n));
    return rank_exact(std::move(rows));
}

std::uint64_t oracle_image_dim(const formal_divisor& d, std::uint64_t p, std::uint64_t n,
                               std::uint64_t cap) {
    if (p < 1 || n < 1) throw usage_error("image dimension needs p >= 1 and n >= 1");
    check_cap(p * n, cap, "product level p*n");
    const explicit_basis base = oracle_basis(d, p, cap);
    const polynomial pole_np = pole_polynomial(d, n * p);
    const std::size_t j_np = pole_np.deg();

    // P_p^n must divide P_np; that is exactly superadditivity of the floors
    const auto [quot, rem] = polynomial::divrem(pole_np, base.pole_poly.pow(n));
    if (!rem.is_zero())
        throw internal_error("superadditivity violated: P_p^n does not divide P_np");
    (void)quot;

    // all multisets of size n of basis elements, as nondecreasing index tuples
    std::vector<std::vector<rational>> rows;
    std::vector<std::size_t> pick(n, 0);
    const std::size_t dim_p = base.elements.size();
    for (;;) {
        rational_function prod(rational(1));
        for (const std::size_t i : pick) prod *= base.elements[i];
        rows.push_back(numerator_coords(prod, pole_np, j_np));

        std::size_t k = n;
        while (k > 0 && pick[k - 1] == dim_p - 1) --k;
        if (k == 0) break;
        const std::size_t next = pick[k - 1] + 1;
        for (std::size_t i = k - 1; i < n; ++i) pick[i] = next;
    }
    return rank_exact(std::move(rows));
}

bool membership(const rational_function& f, const formal_divisor& d, std::uint64_t n) {
    if (f.is_zero()) throw usage_error("membership of the zero function is vacuous");
    const polynomial pole = pole_polynomial(d, n);
    const rational_function q = f * rational_function(pole);
    return q.is_polynomial() && q.num().deg() <= pole.deg();
}

std::int64_t oracle_min_order(const formal_divisor& d, std::uint64_t n,
                              const point_or_infinity& q, std::uint64_t cap) {
    const explicit_basis b = oracle_basis(d, n, cap);
    std::int64_t best = b.elements.front().ord_at(q);
    for (std::size_t i = 1; i < b.elements.size(); ++i)
        best = std::min(best, b.elements[i].ord_at(q));
    return best;
}

}  // namespace apxalg
