#ifndef APXALG_LINALG_HPP
#define APXALG_LINALG_HPP

#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace apxalg {

// Rank over the rationals by exact Gaussian elimination (incremental
// reduction against a growing echelon basis).  No rounding anywhere.
// Throws usage_error when the rows have unequal lengths.
std::size_t rank_exact(std::vector<std::vector<rational>> rows);

}  // namespace apxalg

#endif
