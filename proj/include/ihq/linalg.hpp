#pragma once

#include <vector>

#include "ihq/rational.hpp"

namespace ihq {

// Row-major rectangular matrix of exact rationals.
using Matrix = std::vector<std::vector<Rational>>;

// Rank by exact Gaussian elimination. Pivoting is lexicographic: columns are
// scanned left to right and the first row with a nonzero entry is taken, so
// the elimination (and anything derived from it) is reproducible.
int matrix_rank(Matrix m);

// Greedy maximal linearly independent subset of columns, scanned left to
// right. Returns the selected column indices in increasing order.
std::vector<int> independent_columns(const Matrix& m);

}  // namespace ihq
