#include "point.hpp"

#include <map>

#include "error.hpp"

namespace apxalg {

const rational& point_or_infinity::value() const {
    if (inf_) throw internal_error("point at infinity has no finite value");
    return v_;
}

std::shared_ptr<const point_set> point_set::integers() {
    static const std::shared_ptr<const point_set> instance(
        new point_set(true, {}));
    return instance;
}

std::shared_ptr<const point_set> point_set::from_list(std::vector<rational> pts) {
    std::map<rational, std::size_t> seen;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto [it, fresh] = seen.emplace(pts[i], i);
        if (!fresh)
            throw validation_error("duplicate point: points[" + std::to_string(i) +
                                   "] duplicates points[" + std::to_string(it->second) +
                                   "] (value " + pts[i].str() + ")");
    }
    return std::shared_ptr<const point_set>(new point_set(false, std::move(pts)));
}

std::optional<std::uint64_t> point_set::count() const {
    if (integers_) return std::nullopt;
    return pts_.size();
}

rational point_set::point(std::uint64_t idx) const {
    if (integers_) return rational(integer(idx));
    if (idx >= pts_.size())
        throw internal_error("point index " + std::to_string(idx) + " out of range");
    return pts_[idx];
}

std::optional<std::uint64_t> point_set::index_of(const rational& p) const {
    if (integers_) {
        if (!p.is_integer() || p.sign() < 0) return std::nullopt;
        // Indices beyond 2^64 cannot carry a nonzero floor entry at any
        // representable n, so treating them as absent is exact here.
        if (!mpz_fits_ulong_p(p.num().get_mpz_t())) return std::nullopt;
        return static_cast<std::uint64_t>(mpz_get_ui(p.num().get_mpz_t()));
    }
    for (std::size_t i = 0; i < pts_.size(); ++i)
        if (pts_[i] == p) return i;
    return std::nullopt;
}

}  // namespace apxalg
