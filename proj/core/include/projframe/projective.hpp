#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "projframe/matrix.hpp"

namespace projframe {

/// A point [v] of P_n.
///
/// The representative is canonical: coprime integers with the first nonzero
/// entry positive, so point equality is vector equality.
class ProjPoint {
 public:
  /// Throws Error{ZeroVector} if v is zero.
  explicit ProjPoint(const Vec& v);
  ProjPoint(std::initializer_list<Rational> coords) : ProjPoint(Vec(coords)) {}

  std::size_t ambient_dim() const { return rep_.size() - 1; }
  const Vec& rep() const { return rep_; }

  /// "(x0:x1:...:xn)"
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  Vec rep_;
};

ProjPoint point_from_vector(const Vec& v);

class Hyperplane;

/// Linear subspace of P_n stored as the nonzero rows of an RREF matrix.
/// Equal subspaces have identical bases. The empty subspace has no rows and
/// dimension -1.
class Subspace {
 public:
  Subspace(const ProjPoint& p);  // NOLINT(google-explicit-constructor)

  static Subspace empty(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Row space of the given spanning vectors (each of length n+1).
  static Subspace span(std::size_t ambient_dim, std::span<const Vec> vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const Mat& basis() const { return basis_; }
  /// Projective dimension: rows - 1.
  long dim() const { return static_cast<long>(basis_.rows()) - 1; }
  bool is_empty() const { return basis_.rows() == 0; }

  /// Rows spanning the annihilator (dual) of this subspace.
  Mat annihilator() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient_dim, Mat basis) : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

  std::size_t ambient_dim_;
  Mat basis_;
};

/// Hyperplane given by a covector c: the points p with c . rep(p) = 0.
class Hyperplane {
 public:
  explicit Hyperplane(const Vec& covector);

  std::size_t ambient_dim() const { return covector_.size() - 1; }
  const Vec& covector() const { return covector_; }
  bool satisfied_by(const ProjPoint& p) const;
  std::string to_string() const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

 private:
  Vec covector_;
};

/// Smallest subspace containing all parts. Throws Error{MixedDimensions} on
/// disagreeing ambient dimensions and Error{InvalidArgument} on empty input.
Subspace join(std::span<const Subspace> parts);
Subspace join(std::initializer_list<Subspace> parts);

/// Intersection via the dual: the kernel of both annihilators stacked.
Subspace meet(const Subspace& s1, const Subspace& s2);

bool contains(const Subspace& s, const ProjPoint& p);
/// True iff t is a subspace of s.
bool contains(const Subspace& s, const Subspace& t);

Subspace hyperplane_to_subspace(const Hyperplane& h);
/// Throws Error{NotAHyperplane} when dim(s) != n-1.
Hyperplane subspace_to_hyperplane(const Subspace& s);

/// k <= n+1 points: linear independence of representatives. More points:
/// every (n+1)-subset has nonzero determinant.
bool generic_position(std::span<const ProjPoint> points);

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);
std::ostream& operator<<(std::ostream& os, const Subspace& s);
std::ostream& operator<<(std::ostream& os, const Hyperplane& h);

}  // namespace projframe
