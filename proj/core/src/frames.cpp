#include "projframe/frames.hpp"

#include <string>

#include "projframe/error.hpp"
#include "projframe/linalg.hpp"

namespace projframe {

namespace {

void require_same_center(const AdaptedFrame& f, const AdaptedFrame& f2) {
  if (f.center() != f2.center()) {
    throw Error(ErrorCode::DifferentCenters,
                "frames adapted to " + f.center().to_string() + " and " + f2.center().to_string());
  }
}

GeneratingBasis compute_basis(const std::vector<ProjPoint>& vertices, const ProjPoint& unit) {
  const std::size_t size = unit.rep().size();
  std::vector<Vec> reps;
  for (const auto& v : vertices) reps.push_back(v.rep());
  const Vec lambda = solve(Mat::from_columns(reps, size), unit.rep());

  GeneratingBasis basis;
  for (std::size_t i = 0; i < reps.size(); ++i) basis.vectors.push_back(scale(reps[i], lambda[i]));

  const Vec& first = basis.vectors.front();
  std::size_t lead = 0;
  while (first[lead].is_zero()) ++lead;
  const Rational norm = first[lead].reciprocal();
  for (auto& v : basis.vectors) v = scale(v, norm);
  return basis;
}

}  // namespace

Mat GeneratingBasis::as_columns() const { return Mat::from_columns(vectors, vectors.front().size()); }

Vec GeneratingBasis::sum() const {
  Vec s(vectors.front().size());
  for (const auto& v : vectors) s = add(s, v);
  return s;
}

Frame::Frame(std::vector<ProjPoint> vertices, ProjPoint unit) : vertices_(std::move(vertices)), unit_(std::move(unit)) {
  const std::size_t n = unit_.ambient_dim();
  for (const auto& v : vertices_) {
    if (v.ambient_dim() != n) throw Error(ErrorCode::MixedDimensions, "frame points live in different spaces");
  }
  if (n < 1 || vertices_.size() != n + 1) {
    throw Error(ErrorCode::InvalidFrame, "expected " + std::to_string(n + 1) + " vertices in P_" + std::to_string(n) +
                                             ", got " + std::to_string(vertices_.size()));
  }
  const auto all = points();
  if (!generic_position(all)) throw Error(ErrorCode::InvalidFrame, "frame points are not in generic position");
  basis_ = compute_basis(vertices_, unit_);
  basis_matrix_ = basis_.as_columns();
  basis_inverse_ = inverse(basis_matrix_);
}

Frame Frame::from_basis(std::span<const Vec> basis) {
  if (basis.empty()) throw Error(ErrorCode::InvalidFrame, "empty basis");
  std::vector<ProjPoint> vertices;
  Vec sum(basis.front().size());
  for (const auto& v : basis) {
    vertices.emplace_back(v);
    sum = add(sum, v);
  }
  return Frame(std::move(vertices), ProjPoint(sum));
}

std::vector<ProjPoint> Frame::points() const {
  std::vector<ProjPoint> all = vertices_;
  all.push_back(unit_);
  return all;
}

AdaptedFrame::AdaptedFrame(Frame frame, ProjPoint center) : frame_(std::move(frame)), center_(std::move(center)) {
  if (frame_.ambient_dim() != center_.ambient_dim()) {
    throw Error(ErrorCode::MixedDimensions, "center and frame live in different spaces");
  }
  if (frame_.vertex(0) != center_) {
    throw Error(ErrorCode::InvalidFrame,
                "first vertex " + frame_.vertex(0).to_string() + " is not the center " + center_.to_string());
  }
}

AdaptedFrame AdaptedFrame::from_basis(std::span<const Vec> basis) {
  Frame f = Frame::from_basis(basis);
  ProjPoint center = f.vertex(0);
  return AdaptedFrame(std::move(f), std::move(center));
}

AdaptedFrame AdaptedFrame::standard(const ProjPoint& center) {
  const std::size_t size = center.rep().size();
  std::size_t lead = 0;
  while (center.rep()[lead].is_zero()) ++lead;
  std::vector<Vec> basis{center.rep()};
  for (std::size_t j = 0; j < size; ++j) {
    if (j != lead) basis.push_back(unit_vector(size, j));
  }
  return from_basis(basis);
}

AdaptedFrame AdaptedFrame::standard(std::size_t ambient_dim) { return standard(ProjPoint(unit_vector(ambient_dim + 1, 0))); }

TransitionCoeffs TransitionCoeffs::identity(std::size_t n) { return {Mat::identity(n), Vec(n)}; }

Mat TransitionCoeffs::block_matrix() const {
  const std::size_t n = alpha_cov.size();
  Mat m(n + 1, n + 1);
  m(0, 0) = 1;
  for (std::size_t j = 0; j < n; ++j) m(0, j + 1) = alpha_cov[j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i + 1, j + 1) = alpha_mat(i, j);
  return m;
}

GeneratingBasis generating_basis(const Frame& f) { return f.basis(); }

Vec homogeneous_coords(const ProjPoint& p, const Frame& f) {
  if (p.ambient_dim() != f.ambient_dim()) throw Error(ErrorCode::MixedDimensions, "point and frame dimensions differ");
  return primitive(f.basis_inverse() * p.rep());
}

Vec affine_coords(const ProjPoint& p, const AdaptedFrame& f) {
  if (p.ambient_dim() != f.ambient_dim()) throw Error(ErrorCode::MixedDimensions, "point and frame dimensions differ");
  const Vec x = f.frame().basis_inverse() * p.rep();
  if (x[0].is_zero()) throw Error(ErrorCode::OutsideChart, p.to_string() + " has x^0 = 0");
  Vec out(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) out[i - 1] = x[i] / x[0];
  return out;
}

ProjPoint point_from_affine(const Vec& affine, const AdaptedFrame& f) {
  if (affine.size() != f.ambient_dim()) throw Error(ErrorCode::MixedDimensions, "affine coordinate count");
  Vec x(affine.size() + 1);
  x[0] = 1;
  for (std::size_t i = 0; i < affine.size(); ++i) x[i + 1] = affine[i];
  return ProjPoint(f.frame().basis_matrix() * x);
}

TransitionCoeffs transition(const AdaptedFrame& f, const AdaptedFrame& f2) {
  require_same_center(f, f2);
  const std::size_t n = f.ambient_dim();
  // Columns: f2's generating basis written in f's generating basis.
  const Mat change = f.frame().basis_inverse() * f2.frame().basis_matrix();
  const Rational inv = change(0, 0).reciprocal();
  TransitionCoeffs t{Mat(n, n), Vec(n)};
  for (std::size_t j = 0; j < n; ++j) t.alpha_cov[j] = change(0, j + 1) * inv;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.alpha_mat(i, j) = change(i + 1, j + 1) * inv;
  return t;
}

Vec apply_transition(const TransitionCoeffs& t, const Vec& affine) {
  const std::size_t n = t.alpha_cov.size();
  if (affine.size() != n) throw Error(ErrorCode::MixedDimensions, "affine coordinate count");
  const Rational denom = 1 + dot(t.alpha_cov, affine);
  if (denom.is_zero()) throw Error(ErrorCode::OutsideChart, "point leaves the target chart");
  Vec out = t.alpha_mat * affine;
  for (auto& x : out) x /= denom;
  return out;
}

TransitionCoeffs compose(const TransitionCoeffs& first, const TransitionCoeffs& second) {
  if (first.alpha_cov.size() != second.alpha_cov.size()) throw Error(ErrorCode::MixedDimensions, "transition sizes");
  const Mat product = first.block_matrix() * second.block_matrix();
  const std::size_t n = first.alpha_cov.size();
  return {product.block(1, 1, n, n), product.block(0, 1, 1, n).row(0)};
}

bool has_adapted_block_form(const AdaptedFrame& f, const Frame& g) {
  if (f.ambient_dim() != g.ambient_dim()) throw Error(ErrorCode::MixedDimensions, "frame dimensions differ");
  const std::size_t n = f.ambient_dim();
  const Mat change = f.frame().basis_inverse() * g.basis_matrix();
  for (std::size_t i = 1; i <= n; ++i) {
    if (!change(i, 0).is_zero()) return false;
  }
  return !change(0, 0).is_zero() && !det(change.block(1, 1, n, n)).is_zero();
}

}  // namespace projframe
