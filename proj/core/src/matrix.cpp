#include "projframe/matrix.hpp"

#include <algorithm>
#include <ostream>

#include "projframe/error.hpp"

namespace projframe {

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::span<const Vec> rows, std::size_t cols) {
  Mat m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Mat Mat::from_columns(std::span<const Vec> columns, std::size_t rows) {
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::ShapeMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Mat::append_row(const Vec& row) {
  if (row.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
  Mat b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(row0 + r, col0 + c);
  return b;
}

Mat Mat::scaled(const Rational& factor) const {
  Mat out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Mat operator*(const Mat& lhs, const Mat& rhs) {
  if (lhs.cols() != rhs.rows()) throw Error(ErrorCode::ShapeMismatch, "matrix product shapes");
  Mat out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Rational& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Vec operator*(const Mat& m, const Vec& v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::ShapeMismatch, "matrix-vector shapes");
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) out[i] += m(i, k) * v[k];
  return out;
}

Mat operator+(const Mat& lhs, const Mat& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) throw Error(ErrorCode::ShapeMismatch, "matrix sum shapes");
  Mat out = lhs;
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) += rhs(i, j);
  return out;
}

Rational dot(const Vec& lhs, const Vec& rhs) {
  if (lhs.size() != rhs.size()) throw Error(ErrorCode::ShapeMismatch, "dot product lengths");
  Rational s;
  for (std::size_t i = 0; i < lhs.size(); ++i) s += lhs[i] * rhs[i];
  return s;
}

Vec add(const Vec& lhs, const Vec& rhs) {
  if (lhs.size() != rhs.size()) throw Error(ErrorCode::ShapeMismatch, "vector sum lengths");
  Vec out = lhs;
  for (std::size_t i = 0; i < rhs.size(); ++i) out[i] += rhs[i];
  return out;
}

Vec subtract(const Vec& lhs, const Vec& rhs) {
  if (lhs.size() != rhs.size()) throw Error(ErrorCode::ShapeMismatch, "vector difference lengths");
  Vec out = lhs;
  for (std::size_t i = 0; i < rhs.size(); ++i) out[i] -= rhs[i];
  return out;
}

Vec scale(const Vec& v, const Rational& factor) {
  Vec out = v;
  for (auto& x : out) x *= factor;
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec unit_vector(std::size_t size, std::size_t index) {
  Vec v(size);
  v.at(index) = 1;
  return v;
}

Rational primitive_scale(std::span<const Rational> v) {
  mpz_class den_lcm = 1;
  int lead_sign = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (lead_sign == 0) lead_sign = x.sign();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
  }
  if (lead_sign == 0) throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  mpz_class num_gcd = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    const mpz_class scaled = x.num() * (den_lcm / x.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  return lead_sign < 0 ? -factor : factor;
}

Vec primitive(const Vec& v) { return scale(v, primitive_scale(v)); }

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? ", " : "") << m.row(r);
  return os << ']';
}

}  // namespace projframe
