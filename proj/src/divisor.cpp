#include "divisor.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <string>

#include "error.hpp"

namespace apxalg {

namespace {

using u128 = unsigned __int128;

constexpr u128 u128_max = ~u128(0);
constexpr std::int64_t i64_max = std::numeric_limits<std::int64_t>::max();

// Hard ceiling on materialized support.  floor_degree and the
// superadditivity check have sub-linear paths and are not subject to it.
constexpr std::uint64_t materialize_limit = std::uint64_t(1) << 23;

bool fits_u64(const integer& v) { return v.fits_ulong_p(); }

std::uint64_t to_u64(const integer& v) { return mpz_get_ui(v.get_mpz_t()); }

std::int64_t to_coeff(const integer& v, std::uint64_t n) {
    if (!v.fits_slong_p())
        throw usage_error("floor coefficient at level " + std::to_string(n) +
                          " overflows 64-bit storage");
    return mpz_get_si(v.get_mpz_t());
}

std::int64_t to_coeff(u128 v, std::uint64_t n) {
    if (v > static_cast<u128>(i64_max))
        throw usage_error("floor coefficient at level " + std::to_string(n) +
                          " overflows 64-bit storage");
    return static_cast<std::int64_t>(v);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    __int128 s = static_cast<__int128>(a) + b;
    if (s > i64_max || s < -static_cast<__int128>(i64_max) - 1)
        throw usage_error("divisor coefficient overflow in exact arithmetic");
    return static_cast<std::int64_t>(s);
}

std::int64_t degree_from_u128(u128 sum, std::uint64_t n) {
    if (sum > static_cast<u128>(i64_max))
        throw usage_error("floor degree at level " + std::to_string(n) +
                          " overflows 64-bit storage");
    return static_cast<std::int64_t>(sum);
}

[[noreturn]] void throw_support_too_large(std::uint64_t n) {
    throw usage_error("floor divisor at level " + std::to_string(n) + " has more than " +
                      std::to_string(materialize_limit) +
                      " support points; refusing to materialize");
}

// floor(n * a) for a rational a >= 0, in full precision
integer floor_scaled(std::uint64_t n, const rational& a) {
    integer t = a.num() * integer(static_cast<unsigned long>(n));
    integer q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), a.den().get_mpz_t());
    return q;
}

// Walks the nonzero floor entries (i, floor(n*scale*ratio^i)) of a geometric
// rule in index order, entirely in 128-bit arithmetic.  Returns false as
// soon as any intermediate would overflow; emissions up to that point must
// be discarded by the caller, which retries with geometric_walk_exact.
template <typename Emit>
bool geometric_walk_fast(std::uint64_t n, const rational& scale, const rational& ratio,
                         Emit&& emit) {
    if (n == 0) return true;
    const integer sn = scale.num(), sd = scale.den();
    const integer rn = ratio.num(), rd = ratio.den();
    if (!fits_u64(sn) || !fits_u64(sd) || !fits_u64(rn) || !fits_u64(rd)) return false;
    u128 num = to_u64(sn), den = to_u64(sd);
    const u128 rnum = to_u64(rn), rden = to_u64(rd);
    for (std::uint64_t i = 0;; ++i) {
        if (i >= materialize_limit) throw_support_too_large(n);
        if (num > u128_max / n) return false;
        const u128 v = static_cast<u128>(n) * num / den;
        if (v == 0) return true;  // ratio < 1: all later entries vanish too
        emit(i, v);
        if (num > u128_max / rnum || den > u128_max / rden) return false;
        num *= rnum;
        den *= rden;
    }
}

template <typename Emit>
void geometric_walk_exact(std::uint64_t n, const rational& scale, const rational& ratio,
                          Emit&& emit) {
    if (n == 0) return;
    const integer level(static_cast<unsigned long>(n));
    integer num = scale.num() * level, den = scale.den();
    const integer rnum = ratio.num(), rden = ratio.den();
    for (std::uint64_t i = 0;; ++i) {
        if (i >= materialize_limit) throw_support_too_large(n);
        integer v;
        mpz_fdiv_q(v.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (mpz_sgn(v.get_mpz_t()) == 0) return;
        emit(i, v);
        num *= rnum;
        den *= rden;
    }
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t x = std::uint64_t(1) << ((std::bit_width(n) + 1) / 2);
    for (;;) {
        const std::uint64_t y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

// Divisor-summatory function sum_{k=1..n} floor(n/k) by the hyperbola
// method: 2*sum_{k<=sqrt(n)} floor(n/k) - floor(sqrt(n))^2.
u128 harmonic_floor_sum(std::uint64_t n) {
    const std::uint64_t r = isqrt_u64(n);
    u128 s = 0;
    for (std::uint64_t k = 1; k <= r; ++k) s += n / k;
    return 2 * s - static_cast<u128>(r) * r;
}

}  // namespace

// --- finite_divisor ---------------------------------------------------------

finite_divisor::finite_divisor(point_set_ref pts, std::vector<divisor_entry> entries)
    : pts_(std::move(pts)), entries_(std::move(entries)) {
    std::int64_t prev = std::numeric_limits<std::int64_t>::min();
    const auto cnt = pts_ ? pts_->count() : std::optional<std::uint64_t>(0);
    for (const auto& e : entries_) {
        if (e.idx < infinity_idx || e.idx <= prev || e.coeff == 0)
            throw internal_error("malformed finite divisor entry list");
        if (e.idx >= 0 && cnt && static_cast<std::uint64_t>(e.idx) >= *cnt)
            throw internal_error("finite divisor entry outside its point set");
        prev = e.idx;
    }
}

finite_divisor finite_divisor::from_items(
    const std::vector<std::pair<point_or_infinity, std::int64_t>>& items) {
    // duplicate places are summed; zero totals are dropped
    std::map<point_or_infinity, std::int64_t> acc;
    for (const auto& [q, c] : items) {
        auto [it, fresh] = acc.emplace(q, c);
        if (!fresh) it->second = checked_add(it->second, c);
    }
    std::int64_t at_infinity = 0;
    bool has_infinity = false;
    std::vector<rational> pts;
    std::vector<std::int64_t> coeffs;
    for (const auto& [q, c] : acc) {
        if (c == 0) continue;
        if (q.is_infinity()) {
            at_infinity = c;
            has_infinity = true;
        } else {
            pts.push_back(q.value());
            coeffs.push_back(c);
        }
    }
    std::vector<divisor_entry> entries;
    entries.reserve(coeffs.size() + (has_infinity ? 1 : 0));
    if (has_infinity) entries.push_back({infinity_idx, at_infinity});
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        entries.push_back({static_cast<std::int64_t>(i), coeffs[i]});
    return finite_divisor(point_set::from_list(std::move(pts)), std::move(entries));
}

std::int64_t finite_divisor::degree() const {
    __int128 s = 0;
    for (const auto& e : entries_) s += e.coeff;
    if (s > i64_max || s < -static_cast<__int128>(i64_max) - 1)
        throw usage_error("divisor degree overflows 64-bit storage");
    return static_cast<std::int64_t>(s);
}

point_or_infinity finite_divisor::place_of(const divisor_entry& e) const {
    if (e.idx == infinity_idx) return point_or_infinity::infinity();
    return point_or_infinity(pts_->point(static_cast<std::uint64_t>(e.idx)));
}

std::int64_t finite_divisor::coeff_at(const point_or_infinity& q) const {
    std::int64_t idx;
    if (q.is_infinity()) {
        idx = infinity_idx;
    } else {
        if (!pts_) return 0;
        const auto i = pts_->index_of(q.value());
        if (!i) return 0;
        idx = static_cast<std::int64_t>(*i);
    }
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), idx,
        [](const divisor_entry& e, std::int64_t v) { return e.idx < v; });
    return (it != entries_.end() && it->idx == idx) ? it->coeff : 0;
}

std::vector<std::pair<point_or_infinity, std::int64_t>> finite_divisor::items() const {
    std::vector<std::pair<point_or_infinity, std::int64_t>> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.emplace_back(place_of(e), e.coeff);
    return out;
}

namespace {

bool same_index_space(const finite_divisor& a, const finite_divisor& b) {
    if (a.empty() || b.empty()) return true;
    return a.points() == b.points();
}

std::map<point_or_infinity, std::int64_t> value_map(const finite_divisor& d) {
    std::map<point_or_infinity, std::int64_t> m;
    for (const auto& [q, c] : d.items()) m.emplace(q, c);
    return m;
}

}  // namespace

bool operator==(const finite_divisor& a, const finite_divisor& b) {
    if (same_index_space(a, b)) return a.entries() == b.entries();
    return value_map(a) == value_map(b);
}

finite_divisor divisor_sum(const finite_divisor& a, const finite_divisor& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (same_index_space(a, b)) {
        std::vector<divisor_entry> out;
        out.reserve(a.entries().size() + b.entries().size());
        auto ia = a.entries().begin(), ea = a.entries().end();
        auto ib = b.entries().begin(), eb = b.entries().end();
        while (ia != ea || ib != eb) {
            if (ib == eb || (ia != ea && ia->idx < ib->idx)) {
                out.push_back(*ia++);
            } else if (ia == ea || ib->idx < ia->idx) {
                out.push_back(*ib++);
            } else {
                const std::int64_t c = checked_add(ia->coeff, ib->coeff);
                if (c != 0) out.push_back({ia->idx, c});
                ++ia;
                ++ib;
            }
        }
        return finite_divisor(a.points(), std::move(out));
    }
    auto items = a.items();
    const auto extra = b.items();
    items.insert(items.end(), extra.begin(), extra.end());
    return finite_divisor::from_items(items);
}

finite_divisor divisor_scale(const finite_divisor& a, std::uint64_t k) {
    if (k == 0 || a.empty()) return finite_divisor();
    std::vector<divisor_entry> out;
    out.reserve(a.entries().size());
    for (const auto& e : a.entries()) {
        const __int128 c = static_cast<__int128>(e.coeff) * static_cast<__int128>(k);
        if (c > i64_max || c < -static_cast<__int128>(i64_max) - 1)
            throw usage_error("divisor coefficient overflow in exact arithmetic");
        out.push_back({e.idx, static_cast<std::int64_t>(c)});
    }
    return finite_divisor(a.points(), std::move(out));
}

bool divisor_leq(const finite_divisor& a, const finite_divisor& b) {
    if (same_index_space(a, b)) {
        auto ia = a.entries().begin(), ea = a.entries().end();
        auto ib = b.entries().begin(), eb = b.entries().end();
        while (ia != ea || ib != eb) {
            if (ib == eb || (ia != ea && ia->idx < ib->idx)) {
                if (ia->coeff > 0) return false;  // b has 0 there
                ++ia;
            } else if (ia == ea || ib->idx < ia->idx) {
                if (ib->coeff < 0) return false;  // a has 0 there
                ++ib;
            } else {
                if (ia->coeff > ib->coeff) return false;
                ++ia;
                ++ib;
            }
        }
        return true;
    }
    const auto ma = value_map(a);
    auto mb = value_map(b);
    for (const auto& [q, c] : ma) {
        const auto it = mb.find(q);
        const std::int64_t cb = it == mb.end() ? 0 : it->second;
        if (c > cb) return false;
        if (it != mb.end()) mb.erase(it);
    }
    for (const auto& [q, c] : mb)
        if (c < 0) return false;
    return true;
}

// --- coefficient_rule -------------------------------------------------------

coefficient_rule coefficient_rule::geometric(rational scale, rational ratio) {
    if (scale.sign() <= 0)
        throw validation_error("geometric scale must be positive: got " + scale.str());
    if (ratio.sign() <= 0 || ratio >= rational(1))
        throw validation_error("geometric ratio must lie in (0,1): got " + ratio.str());
    coefficient_rule r;
    r.kind_ = kind::geometric;
    r.scale_ = std::move(scale);
    r.ratio_ = std::move(ratio);
    return r;
}

coefficient_rule coefficient_rule::harmonic() {
    coefficient_rule r;
    r.kind_ = kind::harmonic;
    return r;
}

coefficient_rule coefficient_rule::finite_table(std::vector<rational> values) {
    if (values.empty())
        throw validation_error("finite-table rule needs at least one coefficient");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i].sign() <= 0)
            throw validation_error("coefficient must be positive: table[" + std::to_string(i) +
                                   "] = " + values[i].str());
    coefficient_rule r;
    r.kind_ = kind::finite_table;
    r.table_ = std::move(values);
    return r;
}

coefficient_rule coefficient_rule::custom_table(
    std::vector<std::pair<std::uint64_t, rational>> entries, std::uint64_t cutoff) {
    if (entries.empty())
        throw validation_error("custom-table rule needs at least one coefficient");
    std::uint64_t prev = 0;
    bool first = true;
    for (const auto& [i, v] : entries) {
        if (!first && i <= prev)
            throw validation_error("custom-table indices must be strictly increasing at index " +
                                   std::to_string(i));
        if (v.sign() <= 0)
            throw validation_error("coefficient must be positive: table[" + std::to_string(i) +
                                   "] = " + v.str());
        if (i > cutoff)
            throw validation_error("table index " + std::to_string(i) +
                                   " exceeds the declared cutoff " + std::to_string(cutoff));
        prev = i;
        first = false;
    }
    coefficient_rule r;
    r.kind_ = kind::custom_table;
    r.sparse_ = std::move(entries);
    r.cutoff_ = cutoff;
    return r;
}

std::optional<std::uint64_t> coefficient_rule::max_index() const {
    switch (kind_) {
        case kind::geometric:
        case kind::harmonic:
            return std::nullopt;
        case kind::finite_table:
            return table_.size() - 1;
        case kind::custom_table:
            return cutoff_;
    }
    throw internal_error("unreachable coefficient-rule kind");
}

rational coefficient_rule::coefficient(std::uint64_t i) const {
    switch (kind_) {
        case kind::geometric: {
            integer num, den;
            mpz_pow_ui(num.get_mpz_t(), ratio_.num().get_mpz_t(), i);
            mpz_pow_ui(den.get_mpz_t(), ratio_.den().get_mpz_t(), i);
            return scale_ * rational(num, den);
        }
        case kind::harmonic:
            return rational(integer(1), integer(static_cast<unsigned long>(i)) + 1);
        case kind::finite_table:
            return i < table_.size() ? table_[i] : rational(0);
        case kind::custom_table: {
            const auto it = std::lower_bound(
                sparse_.begin(), sparse_.end(), i,
                [](const auto& e, std::uint64_t v) { return e.first < v; });
            return (it != sparse_.end() && it->first == i) ? it->second : rational(0);
        }
    }
    throw internal_error("unreachable coefficient-rule kind");
}

std::uint64_t coefficient_rule::support_bound(std::uint64_t n) const {
    if (n == 0) return 0;
    switch (kind_) {
        case kind::geometric: {
            // largest index whose floor entry can be nonzero = emit count - 1
            std::uint64_t count = 0;
            const bool ok = geometric_walk_fast(n, scale_, ratio_,
                                                [&](std::uint64_t, u128) { ++count; });
            if (!ok) {
                count = 0;
                geometric_walk_exact(n, scale_, ratio_,
                                     [&](std::uint64_t, const integer&) { ++count; });
            }
            return count == 0 ? 0 : count - 1;
        }
        case kind::harmonic:
            return n - 1;  // a_i >= 1/n exactly for i+1 <= n
        case kind::finite_table:
            return table_.size() - 1;
        case kind::custom_table:
            return cutoff_;
    }
    throw internal_error("unreachable coefficient-rule kind");
}

std::optional<std::uint64_t> coefficient_rule::floor_positive_threshold(std::uint64_t i) const {
    if (kind_ == kind::harmonic) return i + 1;  // ceil(1/a_i) with a_i = 1/(i+1)
    const rational a = coefficient(i);
    if (a.sign() <= 0) return std::nullopt;
    integer t;
    mpz_cdiv_q(t.get_mpz_t(), a.den().get_mpz_t(), a.num().get_mpz_t());
    if (mpz_cmp_ui(t.get_mpz_t(), 1) < 0) return 1;
    if (!fits_u64(t) || to_u64(t) > max_floor_level) return std::nullopt;
    return to_u64(t);
}

void coefficient_rule::floor_entries(std::uint64_t n, std::vector<divisor_entry>& out) const {
    if (n == 0) return;
    switch (kind_) {
        case kind::geometric: {
            const std::size_t base = out.size();
            const bool ok = geometric_walk_fast(n, scale_, ratio_, [&](std::uint64_t i, u128 v) {
                out.push_back({static_cast<std::int64_t>(i), to_coeff(v, n)});
            });
            if (!ok) {
                out.resize(base);
                geometric_walk_exact(n, scale_, ratio_, [&](std::uint64_t i, const integer& v) {
                    out.push_back({static_cast<std::int64_t>(i), to_coeff(v, n)});
                });
            }
            return;
        }
        case kind::harmonic: {
            if (n > materialize_limit) throw_support_too_large(n);
            for (std::uint64_t i = 0; i < n; ++i)
                out.push_back({static_cast<std::int64_t>(i),
                               static_cast<std::int64_t>(n / (i + 1))});
            return;
        }
        case kind::finite_table: {
            for (std::size_t i = 0; i < table_.size(); ++i) {
                const integer v = floor_scaled(n, table_[i]);
                if (mpz_sgn(v.get_mpz_t()) > 0)
                    out.push_back({static_cast<std::int64_t>(i), to_coeff(v, n)});
            }
            return;
        }
        case kind::custom_table: {
            for (const auto& [i, a] : sparse_) {
                const integer v = floor_scaled(n, a);
                if (mpz_sgn(v.get_mpz_t()) > 0)
                    out.push_back({static_cast<std::int64_t>(i), to_coeff(v, n)});
            }
            return;
        }
    }
    throw internal_error("unreachable coefficient-rule kind");
}

std::int64_t coefficient_rule::floor_degree(std::uint64_t n) const {
    if (n == 0) return 0;
    switch (kind_) {
        case kind::geometric: {
            u128 sum = 0;
            bool overflowed = false;
            const bool ok = geometric_walk_fast(n, scale_, ratio_, [&](std::uint64_t, u128 v) {
                if (sum > u128_max - v) overflowed = true;
                if (!overflowed) sum += v;
            });
            if (ok && !overflowed) return degree_from_u128(sum, n);
            integer total = 0;
            geometric_walk_exact(n, scale_, ratio_,
                                 [&](std::uint64_t, const integer& v) { total += v; });
            return to_coeff(total, n);
        }
        case kind::harmonic:
            return degree_from_u128(harmonic_floor_sum(n), n);
        case kind::finite_table: {
            integer total = 0;
            for (const auto& a : table_) total += floor_scaled(n, a);
            return to_coeff(total, n);
        }
        case kind::custom_table: {
            integer total = 0;
            for (const auto& [i, a] : sparse_) total += floor_scaled(n, a);
            return to_coeff(total, n);
        }
    }
    throw internal_error("unreachable coefficient-rule kind");
}

bool operator==(const coefficient_rule& a, const coefficient_rule& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case coefficient_rule::kind::geometric:
            return a.scale_ == b.scale_ && a.ratio_ == b.ratio_;
        case coefficient_rule::kind::harmonic:
            return true;
        case coefficient_rule::kind::finite_table:
            return a.table_ == b.table_;
        case coefficient_rule::kind::custom_table:
            return a.cutoff_ == b.cutoff_ && a.sparse_ == b.sparse_;
    }
    throw internal_error("unreachable coefficient-rule kind");
}

// --- formal_divisor ---------------------------------------------------------

formal_divisor::formal_divisor(point_set_ref pts, coefficient_rule rule)
    : pts_(std::move(pts)), rule_(std::move(rule)) {
    if (!pts_) throw usage_error("formal divisor needs a point set");
    const auto m = rule_.max_index();
    const auto cnt = pts_->count();
    if (!m && cnt)
        throw validation_error(
            "an infinite coefficient rule needs the unbounded integer point sequence; got a "
            "finite list of " +
            std::to_string(*cnt) + " points");
    if (m && cnt && *m >= *cnt)
        throw validation_error("rule references point index " + std::to_string(*m) +
                               " but only " + std::to_string(*cnt) + " points are given");
}

finite_divisor formal_divisor::floor(std::uint64_t n) const {
    if (n > max_floor_level)
        throw usage_error("level " + std::to_string(n) + " exceeds the supported maximum 2^62");
    std::vector<divisor_entry> entries;
    rule_.floor_entries(n, entries);
    return finite_divisor(pts_, std::move(entries));
}

std::int64_t formal_divisor::floor_degree(std::uint64_t n) const {
    if (n > max_floor_level)
        throw usage_error("level " + std::to_string(n) + " exceeds the supported maximum 2^62");
    return rule_.floor_degree(n);
}

bool formal_divisor::superadditive_at(std::uint64_t n, std::uint64_t m) const {
    if (m > max_floor_level || n > max_floor_level - m)
        throw usage_error("level " + std::to_string(n) + "+" + std::to_string(m) +
                          " exceeds the supported maximum 2^62");
    if (rule_.rule_kind() == coefficient_rule::kind::harmonic) {
        // Entry i is floor(n/(i+1)); walk k = i+1 over blocks of constant
        // quotient triple so the sweep is O(sqrt(n+m)) instead of O(n+m).
        const std::uint64_t s = n + m;
        for (std::uint64_t k = 1; k <= s;) {
            const std::uint64_t qn = n / k, qm = m / k, qs = s / k;
            if (qn + qm > qs) return false;
            std::uint64_t next = s / qs;
            if (qn > 0) next = std::min(next, n / qn);
            if (qm > 0) next = std::min(next, m / qm);
            k = next + 1;
        }
        return true;
    }
    return divisor_leq(divisor_sum(floor(n), floor(m)), floor(n + m));
}

rational formal_divisor::coefficient_at(const point_or_infinity& q) const {
    if (q.is_infinity()) return rational(0);
    const auto idx = pts_->index_of(q.value());
    if (!idx) return rational(0);
    const auto m = rule_.max_index();
    if (m && *idx > *m) return rational(0);
    return rule_.coefficient(*idx);
}

bool operator==(const formal_divisor& a, const formal_divisor& b) {
    return *a.pts_ == *b.pts_ && a.rule_ == b.rule_;
}

}  // namespace apxalg
