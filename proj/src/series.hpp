#ifndef APXALG_SERIES_HPP
#define APXALG_SERIES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "divisor.hpp"
#include "point.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

namespace apxalg {

// One row of an approximability certificate.
struct certificate_entry {
    std::uint64_t p = 0;
    rational min_ratio;            // min over sampled n of (n*J(p)+1)/(J(np)+1)
    std::uint64_t min_ratio_n = 0; // smallest n attaining it
    // 2p - J(p); only for the geometric(1, 1/2) divisor, where the graded
    // dimension approaches 2n and the gap has a proved logarithmic bound
    std::optional<std::int64_t> deficiency;
};

// Sampled approximability verdict.  Sampling up to n_max never proves the
// liminf condition, so a passing verdict is only ever "up to samples";
// a refutation records the concrete worst witness pair.
struct certificate_report {
    rational epsilon;
    std::uint64_t n_max = 0;
    std::vector<certificate_entry> entries;  // ascending p, duplicates removed
    bool certified = false;
    // smallest requested p from which every larger requested p also clears
    // the 1 - epsilon line
    std::optional<std::uint64_t> certified_from_p;
    // globally worst sampled pair (p, n), recorded when not certified
    std::optional<std::pair<std::uint64_t, std::uint64_t>> refuted_at;
};

// 2p - J(p) for the geometric(1, 1/2) divisor, against both the floor bound
// floor(log2 p) + 2 and the analytic bound log2(p) + 2p/log2(p).  The
// analytic comparison is certified through exact rational brackets of the
// convex map t -> t + 2p/t; the certificate is one-sided (a false only
// means "not certified"), but for this divisor it never fails.
struct deficiency_result {
    std::uint64_t p = 0;
    std::int64_t deficiency = 0;
    bool within_floor_bound = false;
    bool within_analytic_bound = false;
    bool ok() const { return within_floor_bound && within_analytic_bound; }
};
deficiency_result deficiency_check(std::uint64_t p);

// The graded algebra B = sum B_n attached to a formal divisor, with the
// marked element b1 used by the valuation witness.  B_n is the span of
// Q / P_n over numerators Q of degree <= J(n); all dimension formulas are
// closed forms, each validated against the oracle module in the tests.
class graded_series {
  public:
    // validates b1: nonzero and a member of piece 1
    graded_series(formal_divisor divisor, rational_function b1);

    const formal_divisor& divisor() const { return div_; }
    const rational_function& b1() const { return b1_; }

    std::uint64_t dim_piece(std::uint64_t n) const;                     // J(n)+1
    std::uint64_t image_dim(std::uint64_t p, std::uint64_t n) const;    // n*J(p)+1
    rational approx_ratio(std::uint64_t p, std::uint64_t n) const;

    certificate_report certify_approximable(const rational& epsilon,
                                            std::vector<std::uint64_t> p_list,
                                            std::uint64_t n_max, unsigned threads = 1) const;

    // (n, dim_piece(n)/n) for each sample
    std::vector<std::pair<std::uint64_t, rational>> volume_sequence(
        const std::vector<std::uint64_t>& samples, unsigned threads = 1) const;

    // places q where some element of piece n has ord_q(b / b1^n) < 0:
    // finite q qualifies iff floor(n*a_q) + n*ord_q(b1) > 0, infinity iff
    // n*ord_inf(b1) > 0
    std::vector<point_or_infinity> neg_valuation_support(std::uint64_t n) const;

    // cumulative sizes of the negative-valuation set for n = 1..n_max;
    // qualification is monotone in n (floor(n*c) with c = a_q + ord_q(b1)),
    // so the union size at n equals the instantaneous size at n
    std::vector<std::pair<std::uint64_t, std::uint64_t>> support_growth(
        std::uint64_t n_max) const;

    // true when the divisor is exactly the geometric(1, 1/2) rule, the one
    // whose deficiency 2p - J(p) carries a proved bound
    bool has_deficiency_bound() const;

  private:
    formal_divisor div_;
    rational_function b1_;
};

}  // namespace apxalg

#endif
