#include "projframe/group.hpp"

#include <string>

#include "projframe/error.hpp"
#include "projframe/linalg.hpp"

namespace projframe {

namespace {

void require_same_center(const ProjPoint& a, const ProjPoint& b) {
  if (a != b) throw Error(ErrorCode::DifferentCenters, "centers " + a.to_string() + " and " + b.to_string() + " differ");
}

// Column-major flattening puts the first column first, so primitive_scale fixes
// the sign on its first nonzero entry.
Mat canonical_matrix(const Mat& m) { return m.scaled(primitive_scale(m.transpose().entries())); }

}  // namespace

GroupElement::GroupElement(const ProjPoint& center, const Mat& matrix) : center_(center) {
  const std::size_t size = center.rep().size();
  if (matrix.rows() != size || matrix.cols() != size) {
    throw Error(ErrorCode::ShapeMismatch, "group element needs a " + std::to_string(size) + "x" +
                                              std::to_string(size) + " matrix");
  }
  if (det(matrix).is_zero()) throw Error(ErrorCode::Singular, "group element matrix is singular");
  if (ProjPoint(matrix * center.rep()) != center) {
    throw Error(ErrorCode::NotInStabilizer, "matrix moves the center " + center.to_string());
  }
  matrix_ = canonical_matrix(matrix);
}

GroupElement GroupElement::identity(const ProjPoint& center) {
  return GroupElement(center, Mat::identity(center.rep().size()));
}

GroupElement GroupElement::from_block(const AdaptedFrame& ref, const Rational& a00, const Vec& row, const Mat& block) {
  const std::size_t n = ref.ambient_dim();
  if (row.size() != n || block.rows() != n || block.cols() != n) {
    throw Error(ErrorCode::ShapeMismatch, "block form sizes do not match P_" + std::to_string(n));
  }
  Mat local(n + 1, n + 1);
  local(0, 0) = a00;
  for (std::size_t j = 0; j < n; ++j) local(0, j + 1) = row[j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) local(i + 1, j + 1) = block(i, j);
  const Mat& b = ref.frame().basis_matrix();
  return GroupElement(ref.center(), b * local * ref.frame().basis_inverse());
}

GroupElement GroupElement::inverse() const { return GroupElement(center_, projframe::inverse(matrix_)); }

GroupElement operator*(const GroupElement& lhs, const GroupElement& rhs) {
  require_same_center(lhs.center(), rhs.center());
  return GroupElement(lhs.center(), lhs.matrix() * rhs.matrix());
}

GroupElement element_from_frame_pair(const AdaptedFrame& r, const AdaptedFrame& r2) {
  require_same_center(r.center(), r2.center());
  // g maps r's generating basis to a multiple of r2's.
  return GroupElement(r.center(), r2.frame().basis_matrix() * r.frame().basis_inverse());
}

ProjPoint act_on_point(const GroupElement& g, const ProjPoint& p) {
  if (g.ambient_dim() != p.ambient_dim()) throw Error(ErrorCode::MixedDimensions, "element and point dimensions differ");
  return ProjPoint(g.matrix() * p.rep());
}

AdaptedFrame act_on_frame(const GroupElement& g, const AdaptedFrame& r) {
  require_same_center(g.center(), r.center());
  std::vector<ProjPoint> vertices;
  for (const auto& v : r.frame().vertices()) vertices.push_back(act_on_point(g, v));
  return AdaptedFrame(Frame(std::move(vertices), act_on_point(g, r.unit())), r.center());
}

Mat linear_part(const GroupElement& g, const AdaptedFrame& ref) {
  require_same_center(g.center(), ref.center());
  const std::size_t n = g.ambient_dim();
  const Mat local = ref.frame().basis_inverse() * g.matrix() * ref.frame().basis_matrix();
  return local.block(1, 1, n, n).scaled(local(0, 0).reciprocal());
}

Mat linear_part(const GroupElement& g) { return linear_part(g, AdaptedFrame::standard(g.center())); }

bool is_in_H(const GroupElement& g) { return linear_part(g) == Mat::identity(g.ambient_dim()); }

GroupElement h_element(const AdaptedFrame& ref, const Vec& alpha_cov) {
  return GroupElement::from_block(ref, 1, alpha_cov, Mat::identity(ref.ambient_dim()));
}

TangentBasis tangent_basis(const AdaptedFrame& r, const AdaptedFrame& r_ref) {
  return TangentBasis{transition(r_ref, r).alpha_mat};
}

bool is_equivalent(const AdaptedFrame& r, const AdaptedFrame& r2, const AdaptedFrame& r_ref) {
  require_same_center(r.center(), r2.center());
  return tangent_basis(r, r_ref) == tangent_basis(r2, r_ref);
}

bool is_equivalent(const AdaptedFrame& r, const AdaptedFrame& r2) {
  return is_equivalent(r, r2, AdaptedFrame::standard(r.center()));
}

}  // namespace projframe
