#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "projframe/frames.hpp"
#include "projframe/projective.hpp"

namespace projframe {

/// Transform coefficients (h, a_1..a_n) of a perspective pair: the second
/// frame's affine coordinates change by X^i = h Y^i / (1 + a_j Y^j).
struct PerspectiveCoeffs {
  /// Throws Error{InvalidH} when h = 0.
  PerspectiveCoeffs(Rational h, Vec a);

  Rational h;
  Vec a;

  /// a_1 + ... + a_n + 1 - h. Zero exactly when E' = E.
  Rational e() const;
  /// All a_i nonzero and e nonzero.
  bool strict() const;

  friend bool operator==(const PerspectiveCoeffs&, const PerspectiveCoeffs&) = default;
};

/// B_ij (1 <= i < j <= n) or B_i (j == 0).
struct LabeledPoint {
  std::size_t i = 0;
  std::size_t j = 0;
  ProjPoint point;

  std::string label() const;
};

struct DesarguesReport {
  bool strict = false;
  std::vector<LabeledPoint> b_points;
  Subspace geometric_locus;
  /// The analytic hyperplane, converted to ambient coordinates.
  Hyperplane analytic_hyperplane;
  bool is_hyperplane = false;
  bool passes_through_center = false;
  bool h_equals_one = false;
  bool equivalent = false;
};

/// A'_i on line A_i A_0 for every i, and E' on line E A_0.
bool is_perspective(const AdaptedFrame& r, const AdaptedFrame& r2);

/// Throws Error{NotPerspective} when the transition's linear part is not scalar.
PerspectiveCoeffs transform_coefficients(const AdaptedFrame& r, const AdaptedFrame& r2);

/// Perspective with A'_i != A_i for all i and E' != E.
/// Throws Error{NotPerspective}.
bool is_strict_perspective(const AdaptedFrame& r, const AdaptedFrame& r2);

/// B_ij = A_iA_j meet A'_iA'_j in order (1,2), (1,3), ..., (n-1,n), then
/// B_i = A_iE meet A'_iE' for i = 1..n. Throws Error{NotPerspective},
/// Error{NotStrict}, or Error{DegenerateMeet}.
std::vector<LabeledPoint> b_points(const AdaptedFrame& r, const AdaptedFrame& r2);

/// Join of all B-points.
Subspace desargues_subspace_geometric(const AdaptedFrame& r, const AdaptedFrame& r2);

/// Coefficients (1 - h, a_1, ..., a_n) of the equation (1 - h) x^0 + a_i x^i = 0,
/// unscaled, in the homogeneous coordinates of the first frame.
/// Throws Error{NotStrict}.
Vec desargues_equation(const PerspectiveCoeffs& coeffs);

/// The hyperplane of desargues_equation, canonicalized.
Hyperplane desargues_hyperplane_analytic(const PerspectiveCoeffs& coeffs);

/// Rewrites a hyperplane given in f's homogeneous coordinates in ambient ones.
Hyperplane hyperplane_to_ambient(const Hyperplane& in_frame, const Frame& f);

/// Computes every report field independently: incidence of the center with
/// the geometric locus, the coefficient test h = 1, and tangent-basis
/// equivalence. Asserts nothing.
DesarguesReport check_main_theorem(const AdaptedFrame& r, const AdaptedFrame& r2);

}  // namespace projframe
