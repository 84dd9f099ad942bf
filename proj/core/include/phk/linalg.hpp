#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "phk/rational.hpp"

namespace phk {

/// Sparse row: (column, value) pairs, columns strictly increasing, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Rank over ℚ by fraction-free elimination: rows are scaled to primitive
/// integer vectors and combined with integer multipliers only, dividing out
/// the content after every step.
std::size_t exact_rank(std::vector<SparseRow> rows);

}  // namespace phk
