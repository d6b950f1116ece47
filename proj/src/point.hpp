#ifndef APXALG_POINT_HPP
#define APXALG_POINT_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace apxalg {

// A place of the rational function field: a finite rational point or the
// point at infinity.  Finite points compare by exact value; infinity sorts
// after every finite point.
class point_or_infinity {
  public:
    static point_or_infinity infinity() { return point_or_infinity(true, rational()); }
    static point_or_infinity finite(rational v) { return point_or_infinity(false, std::move(v)); }
    point_or_infinity(const rational& v) : point_or_infinity(false, v) {}

    bool is_infinity() const { return inf_; }
    const rational& value() const;

    friend bool operator==(const point_or_infinity& a, const point_or_infinity& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.v_ == b.v_;
    }
    friend bool operator!=(const point_or_infinity& a, const point_or_infinity& b) {
        return !(a == b);
    }
    friend bool operator<(const point_or_infinity& a, const point_or_infinity& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }

    std::string str() const { return inf_ ? "inf" : v_.str(); }

  private:
    point_or_infinity(bool inf, rational v) : inf_(inf), v_(std::move(v)) {}
    bool inf_;
    rational v_;
};

// Immutable, shared sequence of distinct finite points z_0, z_1, ...
// Either the canonical integer sequence z_i = i (unbounded) or an explicit
// finite list.  Formal divisors index their support into one of these, so
// divisor arithmetic on a shared set never has to touch point values.
class point_set {
  public:
    static std::shared_ptr<const point_set> integers();
    // Throws validation_error on duplicates ("points[j] duplicates points[i]").
    static std::shared_ptr<const point_set> from_list(std::vector<rational> pts);

    bool is_integers() const { return integers_; }
    // nullopt means unbounded
    std::optional<std::uint64_t> count() const;
    rational point(std::uint64_t idx) const;
    std::optional<std::uint64_t> index_of(const rational& p) const;
    const std::vector<rational>& list() const { return pts_; }

    friend bool operator==(const point_set& a, const point_set& b) {
        return a.integers_ == b.integers_ && a.pts_ == b.pts_;
    }

  private:
    point_set(bool integers, std::vector<rational> pts)
        : integers_(integers), pts_(std::move(pts)) {}
    bool integers_;
    std::vector<rational> pts_;
};

using point_set_ref = std::shared_ptr<const point_set>;

}  // namespace apxalg

#endif
