#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "projframe/rational.hpp"

namespace projframe {

using Vec = std::vector<Rational>;

/// Dense row-major matrix of Rationals.
///
/// A matrix may have zero rows (an empty row space) but always has at
/// least one column once constructed with a shape.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat identity(std::size_t n);
  /// Stacks the given vectors as rows; every row must have length cols.
  static Mat from_rows(std::span<const Vec> rows, std::size_t cols);
  static Mat from_columns(std::span<const Vec> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::span<const Rational> entries() const { return data_; }

  void append_row(const Vec& row);
  void swap_rows(std::size_t a, std::size_t b);

  Mat transpose() const;
  Mat block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  Mat scaled(const Rational& factor) const;
  bool is_zero() const;

  friend bool operator==(const Mat& lhs, const Mat& rhs) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Mat operator*(const Mat& lhs, const Mat& rhs);
Vec operator*(const Mat& m, const Vec& v);
Mat operator+(const Mat& lhs, const Mat& rhs);

Rational dot(const Vec& lhs, const Vec& rhs);
Vec add(const Vec& lhs, const Vec& rhs);
Vec subtract(const Vec& lhs, const Vec& rhs);
Vec scale(const Vec& v, const Rational& factor);
bool is_zero(const Vec& v);
Vec unit_vector(std::size_t size, std::size_t index);

/// Factor c such that c*v has coprime integer entries with the first nonzero
/// entry positive. v must not be zero.
Rational primitive_scale(std::span<const Rational> v);
Vec primitive(const Vec& v);

std::ostream& operator<<(std::ostream& os, const Vec& v);
std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace projframe
