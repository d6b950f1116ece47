#include "series.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <string>

#include "error.hpp"
#include "oracle.hpp"
#include "parallel.hpp"

namespace apxalg {

namespace {

using u128 = unsigned __int128;

// J(p) of the geometric(1, 1/2) divisor: sum of the halving sequence
std::uint64_t halving_degree(std::uint64_t p) {
    std::uint64_t s = 0;
    for (std::uint64_t v = p; v > 0; v >>= 1) s += v;
    return s;
}

// smallest n >= 1 with floor(n*c) > 0, i.e. ceil(1/c); nullopt when c <= 0
// or the threshold is beyond every admissible level
std::optional<std::uint64_t> positive_threshold(const rational& c) {
    if (c.sign() <= 0) return std::nullopt;
    integer t;
    mpz_cdiv_q(t.get_mpz_t(), c.den().get_mpz_t(), c.num().get_mpz_t());
    if (mpz_cmp_ui(t.get_mpz_t(), 1) < 0) return 1;
    if (!t.fits_ulong_p()) return std::nullopt;
    const std::uint64_t v = mpz_get_ui(t.get_mpz_t());
    return v > max_floor_level ? std::nullopt : std::optional<std::uint64_t>(v);
}

}  // namespace

deficiency_result deficiency_check(std::uint64_t p) {
    if (p < 2) throw usage_error("deficiency bound needs p >= 2 (log2 undefined below)");
    if (p > max_floor_level)
        throw usage_error("level " + std::to_string(p) + " exceeds the supported maximum 2^62");
    deficiency_result r;
    r.p = p;
    const std::uint64_t j = halving_degree(p);
    r.deficiency = static_cast<std::int64_t>(2 * p - j);  // J(p) <= 2p, so nonnegative
    const std::uint64_t k = std::bit_width(p) - 1;        // floor(log2 p) >= 1
    const u128 d = static_cast<u128>(r.deficiency);
    r.within_floor_bound = d <= static_cast<u128>(k) + 2;

    // certify d <= f(log2 p) for f(t) = t + 2p/t through the convexity of f:
    // its minimum over [k, k+1] (which contains log2 p) is at the endpoint
    // nearer to sqrt(2p), or 2*sqrt(2p) when sqrt(2p) lies inside
    const u128 twop = static_cast<u128>(2) * p;
    if (static_cast<u128>(k) * k >= twop) {
        r.within_analytic_bound = d * k <= static_cast<u128>(k) * k + twop;
    } else if (static_cast<u128>(k + 1) * (k + 1) <= twop) {
        r.within_analytic_bound = d * (k + 1) <= static_cast<u128>(k + 1) * (k + 1) + twop;
    } else {
        r.within_analytic_bound = d * d <= 4 * twop;  // d <= 2*sqrt(2p)
    }
    return r;
}

graded_series::graded_series(formal_divisor divisor, rational_function b1)
    : div_(std::move(divisor)), b1_(std::move(b1)) {
    if (b1_.is_zero()) throw validation_error("b1 must be a nonzero element of graded piece 1");
    if (!membership(b1_, div_, 1))
        throw validation_error("b1 is not a member of graded piece 1: " + b1_.str());
}

std::uint64_t graded_series::dim_piece(std::uint64_t n) const {
    return static_cast<std::uint64_t>(div_.floor_degree(n)) + 1;
}

std::uint64_t graded_series::image_dim(std::uint64_t p, std::uint64_t n) const {
    if (p < 1 || n < 1) throw usage_error("image dimension needs p >= 1 and n >= 1");
    const u128 v = static_cast<u128>(n) * static_cast<u128>(div_.floor_degree(p)) + 1;
    if (v > std::numeric_limits<std::uint64_t>::max())
        throw usage_error("image dimension overflows 64-bit storage");
    return static_cast<std::uint64_t>(v);
}

rational graded_series::approx_ratio(std::uint64_t p, std::uint64_t n) const {
    if (p < 1 || n < 1) throw usage_error("approximation ratio needs p >= 1 and n >= 1");
    if (n > max_floor_level / p)
        throw usage_error("level " + std::to_string(p) + "*" + std::to_string(n) +
                          " exceeds the supported maximum 2^62");
    const integer img(static_cast<unsigned long>(image_dim(p, n)));
    const integer full(static_cast<unsigned long>(dim_piece(p * n)));
    return rational(img, full);
}

bool graded_series::has_deficiency_bound() const {
    const coefficient_rule& rule = div_.rule();
    return rule.rule_kind() == coefficient_rule::kind::geometric &&
           rule.scale() == rational(1) && rule.ratio() == rational(1, 2);
}

certificate_report graded_series::certify_approximable(const rational& epsilon,
                                                       std::vector<std::uint64_t> p_list,
                                                       std::uint64_t n_max,
                                                       unsigned threads) const {
    if (epsilon.sign() <= 0 || epsilon >= rational(1))
        throw usage_error("epsilon must lie in (0,1): got " + epsilon.str());
    if (p_list.empty()) throw usage_error("certification needs a nonempty p list");
    if (n_max < 1) throw usage_error("certification needs n_max >= 1");
    std::sort(p_list.begin(), p_list.end());
    p_list.erase(std::unique(p_list.begin(), p_list.end()), p_list.end());
    if (p_list.front() < 1) throw usage_error("certification needs every p >= 1");
    if (p_list.back() > max_floor_level / n_max)
        throw usage_error("level " + std::to_string(p_list.back()) + "*" +
                          std::to_string(n_max) + " exceeds the supported maximum 2^62");

    certificate_report rep;
    rep.epsilon = epsilon;
    rep.n_max = n_max;
    const rational threshold = rational(1) - epsilon;
    const bool with_deficiency = has_deficiency_bound();

    std::optional<std::pair<std::uint64_t, std::uint64_t>> worst;  // (p, n)
    rational worst_ratio;
    for (const std::uint64_t p : p_list) {
        const std::uint64_t jp = static_cast<std::uint64_t>(div_.floor_degree(p));
        std::vector<rational> ratios(n_max);
        parallel_for(1, n_max + 1, threads, [&](std::uint64_t n) {
            const u128 img = static_cast<u128>(n) * jp + 1;
            const std::uint64_t full = dim_piece(p * n);
            ratios[n - 1] = rational(integer(static_cast<unsigned long>(img)),
                                     integer(static_cast<unsigned long>(full)));
        });
        certificate_entry entry;
        entry.p = p;
        entry.min_ratio = ratios[0];
        entry.min_ratio_n = 1;
        for (std::uint64_t n = 2; n <= n_max; ++n) {
            if (ratios[n - 1] < entry.min_ratio) {
                entry.min_ratio = ratios[n - 1];
                entry.min_ratio_n = n;
            }
        }
        if (with_deficiency)
            entry.deficiency = static_cast<std::int64_t>(2 * p) - div_.floor_degree(p);
        if (!worst || entry.min_ratio < worst_ratio) {
            worst = {p, entry.min_ratio_n};
            worst_ratio = entry.min_ratio;
        }
        rep.entries.push_back(std::move(entry));
    }

    // a pass means the sampled minimum stays above 1 - epsilon; certification
    // requires that from some requested p on, every larger requested p passes
    std::size_t first_pass_suffix = rep.entries.size();
    for (std::size_t i = rep.entries.size(); i-- > 0;) {
        if (rep.entries[i].min_ratio > threshold)
            first_pass_suffix = i;
        else
            break;
    }
    if (first_pass_suffix < rep.entries.size()) {
        rep.certified = true;
        rep.certified_from_p = rep.entries[first_pass_suffix].p;
    } else {
        rep.certified = false;
        rep.refuted_at = worst;
    }
    return rep;
}

std::vector<std::pair<std::uint64_t, rational>> graded_series::volume_sequence(
    const std::vector<std::uint64_t>& samples, unsigned threads) const {
    for (const std::uint64_t n : samples)
        if (n < 1) throw usage_error("volume samples need n >= 1");
    std::vector<std::pair<std::uint64_t, rational>> out(samples.size());
    parallel_for(0, samples.size(), threads, [&](std::uint64_t i) {
        const std::uint64_t n = samples[i];
        out[i] = {n, rational(integer(static_cast<unsigned long>(dim_piece(n))),
                              integer(static_cast<unsigned long>(n)))};
    });
    return out;
}

std::vector<point_or_infinity> graded_series::neg_valuation_support(std::uint64_t n) const {
    if (n < 1) throw usage_error("the valuation witness needs n >= 1");
    const finite_divisor fl = div_.floor(n);
    const finite_divisor b1_div = principal_divisor(b1_);
    std::set<point_or_infinity> out;

    const auto qualifies = [n](std::int64_t floor_coeff, std::int64_t ord) {
        const __int128 total =
            static_cast<__int128>(floor_coeff) + static_cast<__int128>(n) * ord;
        return total > 0;
    };

    for (const auto& e : fl.entries()) {
        const point_or_infinity q = fl.place_of(e);
        if (qualifies(e.coeff, b1_div.coeff_at(q))) out.insert(q);
    }
    for (const auto& [q, ord] : b1_div.items()) {
        if (q.is_infinity()) continue;
        if (fl.coeff_at(q) != 0) continue;  // already scanned above
        if (qualifies(0, ord)) out.insert(q);
    }
    if (static_cast<__int128>(n) * b1_div.coeff_at(point_or_infinity::infinity()) > 0)
        out.insert(point_or_infinity::infinity());
    return std::vector<point_or_infinity>(out.begin(), out.end());
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> graded_series::support_growth(
    std::uint64_t n_max) const {
    if (n_max < 1) throw usage_error("support growth needs n_max >= 1");
    if (n_max > max_floor_level)
        throw usage_error("level " + std::to_string(n_max) +
                          " exceeds the supported maximum 2^62");

    // Each place q has an exact first level t(q) from which it qualifies
    // forever: floor(n*a_q) + n*ord_q(b1) = floor(n*(a_q + ord_q(b1))), so
    // t(q) = ceil(1/(a_q + ord_q(b1))) when that sum is positive.  Counting
    // the places that switch on at each level gives every cumulative size in
    // one pass.
    std::vector<std::uint64_t> switched_on(n_max + 1, 0);
    const finite_divisor b1_div = principal_divisor(b1_);
    std::set<std::uint64_t> handled;  // divisor indices covered by b1's support

    for (const auto& [q, ord] : b1_div.items()) {
        if (q.is_infinity()) {
            if (ord > 0) ++switched_on[1];
            continue;
        }
        const rational a = div_.coefficient_at(q);
        if (!a.is_zero()) {
            const auto idx = div_.points().index_of(q.value());
            if (idx) handled.insert(*idx);
        }
        const auto t = positive_threshold(a + rational(static_cast<long>(ord)));
        if (t && *t <= n_max) ++switched_on[*t];
    }

    const coefficient_rule& rule = div_.rule();
    const std::uint64_t bound = rule.support_bound(n_max);
    for (std::uint64_t i = 0; i <= bound; ++i) {
        if (handled.count(i)) continue;
        const auto t = rule.floor_positive_threshold(i);
        if (t && *t <= n_max) ++switched_on[*t];
    }

    std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;
    counts.reserve(n_max);
    std::uint64_t running = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        running += switched_on[n];
        counts.emplace_back(n, running);
    }
    return counts;
}

}  // namespace apxalg
