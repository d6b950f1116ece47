#ifndef APXALG_DIVISOR_HPP
#define APXALG_DIVISOR_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "point.hpp"
#include "rational.hpp"

namespace apxalg {

// One support entry of a finite divisor.  idx indexes the owning point_set;
// the reserved index -1 stands for the point at infinity.
struct divisor_entry {
    std::int64_t idx;
    std::int64_t coeff;
    friend bool operator==(const divisor_entry&, const divisor_entry&) = default;
};

// Finite divisor: a finite map from places to nonzero integers.  Entries are
// kept sorted by index into a shared point_set, so the hot same-set
// arithmetic (sums, scalings, entrywise comparison) never materializes point
// values.  Operations across different point sets fall back to exact
// value-keyed alignment.
class finite_divisor {
  public:
    static constexpr std::int64_t infinity_idx = -1;

    finite_divisor() = default;
    // entries must be sorted by idx with no duplicates and no zero coeffs
    finite_divisor(point_set_ref pts, std::vector<divisor_entry> entries);
    // duplicate places are summed; zero totals are dropped
    static finite_divisor from_items(
        const std::vector<std::pair<point_or_infinity, std::int64_t>>& items);

    bool empty() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    std::int64_t degree() const;
    const std::vector<divisor_entry>& entries() const { return entries_; }
    const point_set_ref& points() const { return pts_; }

    point_or_infinity place_of(const divisor_entry& e) const;
    std::int64_t coeff_at(const point_or_infinity& q) const;

    // entries resolved to places, in storage order
    std::vector<std::pair<point_or_infinity, std::int64_t>> items() const;

    // exact value-based equality, independent of the backing point set
    friend bool operator==(const finite_divisor& a, const finite_divisor& b);
    friend bool operator!=(const finite_divisor& a, const finite_divisor& b) { return !(a == b); }

  private:
    point_set_ref pts_;
    std::vector<divisor_entry> entries_;
};

finite_divisor divisor_sum(const finite_divisor& a, const finite_divisor& b);
finite_divisor divisor_scale(const finite_divisor& a, std::uint64_t k);
// entrywise a <= b over the union of supports (absent = 0)
bool divisor_leq(const finite_divisor& a, const finite_divisor& b);

// Coefficient rule of a formal divisor: assigns a positive rational a_i to
// each in-support index i, with an effective support bound M(n) such that
// a_i < 1/n for every i > M(n).  The bound is part of the contract, not
// discovered by search, which is what keeps every floor divisor finite.
class coefficient_rule {
  public:
    enum class kind { geometric, harmonic, finite_table, custom_table };

    static coefficient_rule geometric(rational scale, rational ratio);
    static coefficient_rule harmonic();
    static coefficient_rule finite_table(std::vector<rational> values);
    static coefficient_rule custom_table(std::vector<std::pair<std::uint64_t, rational>> entries,
                                         std::uint64_t cutoff);

    kind rule_kind() const { return kind_; }
    // largest in-support index; nullopt for the infinite kinds
    std::optional<std::uint64_t> max_index() const;
    // a_i, or exactly 0 off support
    rational coefficient(std::uint64_t i) const;
    std::uint64_t support_bound(std::uint64_t n) const;
    // smallest n with floor(n*a_i) > 0, i.e. ceil(1/a_i); nullopt when the
    // index is off support or the threshold exceeds every admissible level
    std::optional<std::uint64_t> floor_positive_threshold(std::uint64_t i) const;

    // appends the nonzero entries (i, floor(n*a_i)) in index order
    void floor_entries(std::uint64_t n, std::vector<divisor_entry>& out) const;
    std::int64_t floor_degree(std::uint64_t n) const;

    // parameter accessors for serialization
    const rational& scale() const { return scale_; }
    const rational& ratio() const { return ratio_; }
    const std::vector<rational>& table() const { return table_; }
    const std::vector<std::pair<std::uint64_t, rational>>& sparse_table() const { return sparse_; }
    std::uint64_t cutoff() const { return cutoff_; }

    friend bool operator==(const coefficient_rule& a, const coefficient_rule& b);

  private:
    coefficient_rule() = default;
    kind kind_ = kind::harmonic;
    rational scale_, ratio_;                                // geometric
    std::vector<rational> table_;                           // finite_table
    std::vector<std::pair<std::uint64_t, rational>> sparse_;  // custom_table
    std::uint64_t cutoff_ = 0;
};

// Formal divisor D = sum a_i [z_i]: distinct finite points indexed by a
// shared point_set plus a coefficient rule.  floor(n) is the integral
// divisor with entry floor(n*a_i) at z_i, finite by the rule's support
// bound.
class formal_divisor {
  public:
    formal_divisor(point_set_ref pts, coefficient_rule rule);

    const point_set& points() const { return *pts_; }
    const point_set_ref& points_ref() const { return pts_; }
    const coefficient_rule& rule() const { return rule_; }

    finite_divisor floor(std::uint64_t n) const;
    // degree of floor(n), i.e. J(n), without materializing the divisor
    std::int64_t floor_degree(std::uint64_t n) const;
    // floor(n) + floor(m) <= floor(n+m) entrywise; a test oracle, the
    // superadditivity lemma says it never returns false
    bool superadditive_at(std::uint64_t n, std::uint64_t m) const;

    // coefficient of D at a place (exactly 0 off support; 0 at infinity)
    rational coefficient_at(const point_or_infinity& q) const;

    friend bool operator==(const formal_divisor& a, const formal_divisor& b);

  private:
    point_set_ref pts_;
    coefficient_rule rule_;
};

// Largest admissible n for floor computations.  Keeps n*num products inside
// the checked 128-bit fast path; far beyond any desk-scale sweep.
inline constexpr std::uint64_t max_floor_level = std::uint64_t(1) << 62;

}  // namespace apxalg

#endif
