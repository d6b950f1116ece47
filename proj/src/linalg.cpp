#include "linalg.hpp"

#include <map>
#include <utility>

#include "error.hpp"

namespace apxalg {

std::size_t rank_exact(std::vector<std::vector<rational>> rows) {
    const std::size_t width = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != width) throw usage_error("rank of a ragged matrix");

    // echelon basis keyed by pivot column; pivots normalized to 1
    std::map<std::size_t, std::vector<rational>> basis;
    for (auto& row : rows) {
        std::size_t c = 0;
        while (c < width) {
            if (row[c].is_zero()) {
                ++c;
                continue;
            }
            const auto it = basis.find(c);
            if (it == basis.end()) break;
            const rational f = row[c];
            const std::vector<rational>& e = it->second;
            for (std::size_t j = c; j < width; ++j) row[j] -= f * e[j];
            ++c;  // row[c] is exactly zero now
        }
        if (c >= width) continue;  // linearly dependent on the basis
        const rational inv = rational(1) / row[c];
        for (std::size_t j = c; j < width; ++j) row[j] *= inv;
        basis.emplace(c, std::move(row));
    }
    return basis.size();
}

}  // namespace apxalg
