#include "projframe/desargues.hpp"

#include <string>

#include "projframe/error.hpp"
#include "projframe/group.hpp"

namespace projframe {

namespace {

void require_same_center(const AdaptedFrame& r, const AdaptedFrame& r2) {
  if (r.center() != r2.center()) throw Error(ErrorCode::DifferentCenters, "frames have different centers");
}

ProjPoint single_point(const Subspace& s, const std::string& what) {
  if (s.dim() != 0) {
    throw Error(ErrorCode::DegenerateMeet, what + " has dimension " + std::to_string(s.dim()) + ", expected a point");
  }
  return ProjPoint(s.basis().row(0));
}

}  // namespace

PerspectiveCoeffs::PerspectiveCoeffs(Rational h_value, Vec a_values) : h(std::move(h_value)), a(std::move(a_values)) {
  if (h.is_zero()) throw Error(ErrorCode::InvalidH, "h must be nonzero");
}

Rational PerspectiveCoeffs::e() const {
  Rational sum = 1 - h;
  for (const auto& x : a) sum += x;
  return sum;
}

bool PerspectiveCoeffs::strict() const {
  for (const auto& x : a) {
    if (x.is_zero()) return false;
  }
  return !e().is_zero();
}

std::string LabeledPoint::label() const {
  if (j == 0) return "B" + std::to_string(i);
  const std::string sep = (i >= 10 || j >= 10) ? "," : "";
  return "B" + std::to_string(i) + sep + std::to_string(j);
}

bool is_perspective(const AdaptedFrame& r, const AdaptedFrame& r2) {
  require_same_center(r, r2);
  const ProjPoint& a0 = r.vertex(0);
  for (std::size_t i = 1; i <= r.ambient_dim(); ++i) {
    if (!contains(join({r.vertex(i), a0}), r2.vertex(i))) return false;
  }
  return contains(join({r.unit(), a0}), r2.unit());
}

PerspectiveCoeffs transform_coefficients(const AdaptedFrame& r, const AdaptedFrame& r2) {
  const TransitionCoeffs t = transition(r, r2);
  const std::size_t n = r.ambient_dim();
  const Rational h = t.alpha_mat(0, 0);
  if (t.alpha_mat != Mat::identity(n).scaled(h)) {
    throw Error(ErrorCode::NotPerspective, "transition linear part is not a multiple of the identity");
  }
  return PerspectiveCoeffs(h, t.alpha_cov);
}

bool is_strict_perspective(const AdaptedFrame& r, const AdaptedFrame& r2) {
  if (!is_perspective(r, r2)) throw Error(ErrorCode::NotPerspective, "frames are not in perspective");
  for (std::size_t i = 1; i <= r.ambient_dim(); ++i) {
    if (r.vertex(i) == r2.vertex(i)) return false;
  }
  return r.unit() != r2.unit();
}

std::vector<LabeledPoint> b_points(const AdaptedFrame& r, const AdaptedFrame& r2) {
  if (!is_strict_perspective(r, r2)) throw Error(ErrorCode::NotStrict, "frames are in perspective but not strictly");
  const std::size_t n = r.ambient_dim();
  std::vector<LabeledPoint> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Subspace m = meet(join({r.vertex(i), r.vertex(j)}), join({r2.vertex(i), r2.vertex(j)}));
      out.push_back({i, j, single_point(m, "B" + std::to_string(i) + std::to_string(j))});
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const Subspace m = meet(join({r.vertex(i), r.unit()}), join({r2.vertex(i), r2.unit()}));
    out.push_back({i, 0, single_point(m, "B" + std::to_string(i))});
  }
  return out;
}

Subspace desargues_subspace_geometric(const AdaptedFrame& r, const AdaptedFrame& r2) {
  std::vector<Subspace> parts;
  for (const auto& b : b_points(r, r2)) parts.emplace_back(b.point);
  return join(parts);
}

Vec desargues_equation(const PerspectiveCoeffs& coeffs) {
  if (!coeffs.strict()) throw Error(ErrorCode::NotStrict, "coefficients need every a_i != 0 and e != 0");
  Vec covector{1 - coeffs.h};
  covector.insert(covector.end(), coeffs.a.begin(), coeffs.a.end());
  return covector;
}

Hyperplane desargues_hyperplane_analytic(const PerspectiveCoeffs& coeffs) {
  return Hyperplane(desargues_equation(coeffs));
}

Hyperplane hyperplane_to_ambient(const Hyperplane& in_frame, const Frame& f) {
  if (in_frame.ambient_dim() != f.ambient_dim()) throw Error(ErrorCode::MixedDimensions, "hyperplane and frame");
  // x_frame = B^{-1} x, so c . x_frame = (c B^{-1}) . x.
  return Hyperplane(f.basis_inverse().transpose() * in_frame.covector());
}

DesarguesReport check_main_theorem(const AdaptedFrame& r, const AdaptedFrame& r2) {
  auto points = b_points(r, r2);
  std::vector<Subspace> parts;
  for (const auto& b : points) parts.emplace_back(b.point);
  Subspace locus = join(parts);

  const PerspectiveCoeffs coeffs = transform_coefficients(r, r2);
  Hyperplane analytic = hyperplane_to_ambient(desargues_hyperplane_analytic(coeffs), r.frame());

  DesarguesReport report{
      .strict = true,
      .b_points = std::move(points),
      .geometric_locus = locus,
      .analytic_hyperplane = std::move(analytic),
  };
  report.is_hyperplane = locus.dim() == static_cast<long>(r.ambient_dim()) - 1;
  report.passes_through_center = contains(locus, r.center());
  report.h_equals_one = coeffs.h == 1;
  report.equivalent = is_equivalent(r, r2);
  return report;
}

}  // namespace projframe
