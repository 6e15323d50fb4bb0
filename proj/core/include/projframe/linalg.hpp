#pragma once

#include <cstddef>
#include <vector>

#include "projframe/matrix.hpp"

namespace projframe {

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form over Q. Pivots are the first nonzero entry in
/// column order; no magnitude pivoting, so the result is fully deterministic.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Basis of the right null space, one vector per row. Each basis vector has
/// a single free variable set to 1 and the others to 0; rows are ordered by
/// free column.
Mat kernel_basis(const Mat& m);

/// Throws Error{NonSquare} for non-square input.
Rational det(const Mat& m);

/// Unique x with m*x = b. Throws Error{NonSquare} or Error{Singular}.
Vec solve(const Mat& m, const Vec& b);

/// Throws Error{NonSquare} or Error{Singular}.
Mat inverse(const Mat& m);

}  // namespace projframe
