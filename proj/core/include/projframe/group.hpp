#pragma once

#include "projframe/frames.hpp"
#include "projframe/matrix.hpp"
#include "projframe/projective.hpp"

namespace projframe {

/// Element of G, the stabilizer of a center A, as an invertible matrix in
/// ambient coordinates up to scale.
///
/// The stored matrix is canonical: coprime integer entries with the first
/// nonzero entry of the first column positive. Two elements are equal iff
/// they act identically on P_n.
class GroupElement {
 public:
  /// Throws Error{Singular} for a singular matrix and Error{NotInStabilizer}
  /// when the matrix moves the center.
  GroupElement(const ProjPoint& center, const Mat& matrix);

  static GroupElement identity(const ProjPoint& center);

  /// Builds g from its block form [[a00, row], [0, block]] relative to the
  /// generating basis of `ref`.
  static GroupElement from_block(const AdaptedFrame& ref, const Rational& a00, const Vec& row, const Mat& block);

  const ProjPoint& center() const { return center_; }
  const Mat& matrix() const { return matrix_; }
  std::size_t ambient_dim() const { return center_.ambient_dim(); }

  GroupElement inverse() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  ProjPoint center_;
  Mat matrix_;
};

/// Group product; (g1 * g2) acts as g1 after g2.
GroupElement operator*(const GroupElement& lhs, const GroupElement& rhs);

/// Basis of V = T_A P_n, expressed relative to a reference frame's natural basis.
struct TangentBasis {
  Mat jac;

  friend bool operator==(const TangentBasis&, const TangentBasis&) = default;
};

/// The unique g in G with g . r = r2. Throws Error{DifferentCenters}.
GroupElement element_from_frame_pair(const AdaptedFrame& r, const AdaptedFrame& r2);

ProjPoint act_on_point(const GroupElement& g, const ProjPoint& p);
AdaptedFrame act_on_frame(const GroupElement& g, const AdaptedFrame& r);

/// Matrix of d_A g in the natural basis of `ref`'s chart: the lower-right
/// n x n block of g in ref's generating basis, scaled so entry (0,0) is 1.
Mat linear_part(const GroupElement& g, const AdaptedFrame& ref);
/// Same, relative to AdaptedFrame::standard(g.center()).
Mat linear_part(const GroupElement& g);

/// Kernel of the linearizing map: linear part equal to the identity.
bool is_in_H(const GroupElement& g);

/// Element of H with equations X^i = Y^i / (1 + alpha_j Y^j) w.r.t. ref.
GroupElement h_element(const AdaptedFrame& ref, const Vec& alpha_cov);

/// Jacobian at the center of the chart change from r_ref's chart to r's chart.
TangentBasis tangent_basis(const AdaptedFrame& r, const AdaptedFrame& r_ref);

/// Same H-orbit: equal tangent bases relative to a reference frame. The
/// answer does not depend on the reference.
bool is_equivalent(const AdaptedFrame& r, const AdaptedFrame& r2, const AdaptedFrame& r_ref);
bool is_equivalent(const AdaptedFrame& r, const AdaptedFrame& r2);

}  // namespace projframe
