#pragma once

#include <cstddef>
#include <vector>

#include "projframe/matrix.hpp"
#include "projframe/projective.hpp"

namespace projframe {

/// Basis of V_{n+1} generating a frame: vector i projects to vertex i and
/// the sum projects to the unit point. Scale is fixed by making the first
/// nonzero entry of vectors[0] equal to 1.
struct GeneratingBasis {
  std::vector<Vec> vectors;

  /// The basis vectors as the columns of an (n+1)x(n+1) matrix.
  Mat as_columns() const;
  Vec sum() const;
};

/// Projective frame {A_0, ..., A_n, E}, validated for generic position at
/// construction.
class Frame {
 public:
  /// Throws Error{InvalidFrame} unless there are n+1 vertices in P_n and all
  /// n+2 points are in generic position, Error{MixedDimensions} on mixed
  /// ambient dimensions.
  Frame(std::vector<ProjPoint> vertices, ProjPoint unit);

  /// Frame generated by the given basis (n+1 independent vectors).
  static Frame from_basis(std::span<const Vec> basis);

  std::size_t ambient_dim() const { return unit_.ambient_dim(); }
  const std::vector<ProjPoint>& vertices() const { return vertices_; }
  const ProjPoint& vertex(std::size_t i) const { return vertices_.at(i); }
  const ProjPoint& unit() const { return unit_; }
  /// A_0, ..., A_n, E in order.
  std::vector<ProjPoint> points() const;

  const GeneratingBasis& basis() const { return basis_; }
  /// Columns are the generating basis; maps frame coordinates to ambient ones.
  const Mat& basis_matrix() const { return basis_matrix_; }
  /// Maps ambient coordinates to frame coordinates.
  const Mat& basis_inverse() const { return basis_inverse_; }

  friend bool operator==(const Frame& lhs, const Frame& rhs) {
    return lhs.vertices_ == rhs.vertices_ && lhs.unit_ == rhs.unit_;
  }

 private:
  std::vector<ProjPoint> vertices_;
  ProjPoint unit_;
  GeneratingBasis basis_;
  Mat basis_matrix_;
  Mat basis_inverse_;
};

/// Frame whose first vertex is the center A.
class AdaptedFrame {
 public:
  /// Throws Error{InvalidFrame} if frame.vertex(0) != center.
  AdaptedFrame(Frame frame, ProjPoint center);

  static AdaptedFrame from_basis(std::span<const Vec> basis);

  /// Canonical adapted frame for a center: A_0 = center, the remaining basis
  /// vectors are the standard unit vectors except the one at the center's
  /// first nonzero coordinate. For center (1:0:...:0) this is the standard frame.
  static AdaptedFrame standard(const ProjPoint& center);
  static AdaptedFrame standard(std::size_t ambient_dim);

  const Frame& frame() const { return frame_; }
  const ProjPoint& center() const { return center_; }
  std::size_t ambient_dim() const { return frame_.ambient_dim(); }
  const ProjPoint& vertex(std::size_t i) const { return frame_.vertex(i); }
  const ProjPoint& unit() const { return frame_.unit(); }

  friend bool operator==(const AdaptedFrame&, const AdaptedFrame&) = default;

 private:
  Frame frame_;
  ProjPoint center_;
};

/// Coefficients of the transition law X^i = alpha^i_j Y^j / (1 + alpha_j Y^j).
struct TransitionCoeffs {
  Mat alpha_mat;  // n x n, (i, j) -> alpha^i_j
  Vec alpha_cov;  // length n, alpha_j

  static TransitionCoeffs identity(std::size_t n);
  /// The normalized change-of-basis block matrix [[1, alpha_cov], [0, alpha_mat]].
  Mat block_matrix() const;

  friend bool operator==(const TransitionCoeffs&, const TransitionCoeffs&) = default;
};

GeneratingBasis generating_basis(const Frame& f);

/// Canonical homogeneous coordinates of p w.r.t. f.
Vec homogeneous_coords(const ProjPoint& p, const Frame& f);

/// X^i = x^i / x^0. Throws Error{OutsideChart} when x^0 = 0.
Vec affine_coords(const ProjPoint& p, const AdaptedFrame& f);

/// Point with the given affine coordinates in the chart of f.
ProjPoint point_from_affine(const Vec& affine, const AdaptedFrame& f);

/// Coefficients expressing f-coordinates in terms of f2-coordinates.
/// Throws Error{DifferentCenters}.
TransitionCoeffs transition(const AdaptedFrame& f, const AdaptedFrame& f2);

/// Evaluates the transition law on f2-coordinates, giving f-coordinates.
/// Throws Error{OutsideChart} when the denominator vanishes.
Vec apply_transition(const TransitionCoeffs& t, const Vec& affine);

/// Given t(f, f2) and t(f2, f3), returns t(f, f3).
TransitionCoeffs compose(const TransitionCoeffs& first, const TransitionCoeffs& second);

/// Block-form test: in bases generating f and g, g's basis is
/// A'_0 = c A_0, A'_i = c_i A_0 + c^j_i A_j with c != 0 and det(c^j_i) != 0.
bool has_adapted_block_form(const AdaptedFrame& f, const Frame& g);

}  // namespace projframe
