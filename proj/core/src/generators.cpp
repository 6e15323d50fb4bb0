#include "projframe/generators.hpp"

#include <string>

#include "projframe/error.hpp"
#include "projframe/linalg.hpp"

namespace projframe {

namespace {

void require_bound(std::int64_t bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "coefficient bound must be at least 1");
}

Vec random_vec(std::size_t size, Rng& rng, std::int64_t bound) {
  Vec v(size);
  for (auto& x : v) x = rng.uniform(-bound, bound);
  return v;
}

[[noreturn]] void exhausted(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, what + ": no valid sample after " + std::to_string(kMaxResamples) + " draws");
}

}  // namespace

Mat gen_invertible(std::size_t n, Rng& rng, std::int64_t bound) {
  require_bound(bound);
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(-bound, bound);
    if (!det(m).is_zero()) return m;
  }
  exhausted("invertible matrix");
}

AdaptedFrame gen_adapted_frame(std::size_t n, Rng& rng, std::int64_t bound) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be at least 2");
  require_bound(bound);
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    std::vector<Vec> basis{unit_vector(n + 1, 0)};
    for (std::size_t i = 1; i <= n; ++i) basis.push_back(random_vec(n + 1, rng, bound));
    if (det(Mat::from_columns(basis, n + 1)).is_zero()) continue;
    return AdaptedFrame::from_basis(basis);
  }
  exhausted("adapted frame");
}

AdaptedFrame gen_perspective_mate(const AdaptedFrame& r, const Rational& h, const Vec& a) {
  if (h.is_zero()) throw Error(ErrorCode::InvalidH, "h must be nonzero");
  const std::size_t n = r.ambient_dim();
  if (a.size() != n) throw Error(ErrorCode::MixedDimensions, "need one a_i per vertex");
  const auto& base = r.frame().basis().vectors;
  std::vector<Vec> basis{base[0]};
  for (std::size_t i = 1; i <= n; ++i) basis.push_back(add(scale(base[0], a[i - 1]), scale(base[i], h)));
  return AdaptedFrame(Frame::from_basis(basis), r.center());
}

PerspectiveCoeffs gen_strict_coeffs(std::size_t n, Rng& rng, std::int64_t bound, HChoice choice) {
  require_bound(bound);
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    Rational h = 1;
    if (choice != HChoice::One) {
      h = rng.nonzero(bound);
      if (choice == HChoice::NotOne && h == 1) continue;
    }
    Vec a(n);
    for (auto& x : a) x = rng.nonzero(bound);
    PerspectiveCoeffs coeffs(h, a);
    if (coeffs.strict()) return coeffs;
  }
  exhausted("strict coefficients");
}

GroupElement gen_group_element(const AdaptedFrame& ref, Rng& rng, std::int64_t bound) {
  const std::size_t n = ref.ambient_dim();
  const Rational a00 = rng.nonzero(bound);
  const Vec row = random_vec(n, rng, bound);
  return GroupElement::from_block(ref, a00, row, gen_invertible(n, rng, bound));
}

GroupElement gen_h_element(const AdaptedFrame& ref, Rng& rng, std::int64_t bound) {
  return h_element(ref, random_vec(ref.ambient_dim(), rng, bound));
}

ProjPoint gen_chart_point(const AdaptedFrame& f1, const AdaptedFrame& f2, Rng& rng, std::int64_t bound) {
  require_bound(bound);
  const std::size_t size = f1.ambient_dim() + 1;
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    const Vec v = random_vec(size, rng, bound);
    if (is_zero(v)) continue;
    const ProjPoint p(v);
    if ((f1.frame().basis_inverse() * p.rep())[0].is_zero()) continue;
    if ((f2.frame().basis_inverse() * p.rep())[0].is_zero()) continue;
    return p;
  }
  exhausted("chart point");
}

}  // namespace projframe
