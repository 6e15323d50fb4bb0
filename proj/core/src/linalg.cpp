#include "projframe/linalg.hpp"

#include <string>

#include "projframe/error.hpp"

namespace projframe {

namespace {

void require_square(const Mat& m, const char* op) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NonSquare, std::string(op) + " needs a square matrix, got " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()));
  }
}

// Gauss-Jordan on an augmented block [m | rhs] restricted to the first
// `pivot_limit` columns for pivot selection.
RrefResult reduce(Mat work, std::size_t pivot_limit) {
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < pivot_limit && lead_row < work.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < work.rows() && work(p, c).is_zero()) ++p;
    if (p == work.rows()) continue;
    work.swap_rows(p, lead_row);

    const Rational inv = work(lead_row, c).reciprocal();
    for (std::size_t j = c; j < work.cols(); ++j) work(lead_row, j) *= inv;

    for (std::size_t r = 0; r < work.rows(); ++r) {
      if (r == lead_row || work(r, c).is_zero()) continue;
      const Rational f = work(r, c);
      for (std::size_t j = c; j < work.cols(); ++j) work(r, j) -= f * work(lead_row, j);
    }
    out.pivot_cols.push_back(c);
    ++lead_row;
  }
  out.rank = lead_row;
  out.reduced = std::move(work);
  return out;
}

}  // namespace

RrefResult rref(const Mat& m) { return reduce(m, m.cols()); }

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;

  Mat basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) v[r.pivot_cols[k]] = -r.reduced(k, free);
    basis.append_row(v);
  }
  return basis;
}

Rational det(const Mat& m) {
  require_square(m, "det");
  Mat work = m;
  const std::size_t n = m.rows();
  Rational result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && work(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      work.swap_rows(p, c);
      result = -result;
    }
    const Rational& pivot = work(c, c);
    result *= pivot;
    const Rational inv = pivot.reciprocal();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (work(r, c).is_zero()) continue;
      const Rational f = work(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) work(r, j) -= f * work(c, j);
    }
  }
  return result;
}

Vec solve(const Mat& m, const Vec& b) {
  require_square(m, "solve");
  if (b.size() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "right-hand side length");
  const std::size_t n = m.rows();
  Mat aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const RrefResult r = reduce(std::move(aug), n);
  if (r.rank != n) throw Error(ErrorCode::Singular, "matrix is singular");
  return r.reduced.col(n);
}

Mat inverse(const Mat& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult r = reduce(std::move(aug), n);
  if (r.rank != n) throw Error(ErrorCode::Singular, "matrix is singular");
  return r.reduced.block(0, n, n, n);
}

}  // namespace projframe
