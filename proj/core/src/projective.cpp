#include "projframe/projective.hpp"

#include <ostream>
#include <string>

#include "projframe/error.hpp"
#include "projframe/linalg.hpp"

namespace projframe {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::MixedDimensions,
                "ambient dimensions " + std::to_string(a) + " and " + std::to_string(b) + " differ");
  }
}

Mat nonzero_rows(const RrefResult& r) { return r.reduced.block(0, 0, r.rank, r.reduced.cols()); }

std::string colon_list(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ":" : "") + v[i].to_string();
  return out + ")";
}

}  // namespace

ProjPoint::ProjPoint(const Vec& v) {
  if (v.empty() || is_zero(v)) throw Error(ErrorCode::ZeroVector, "a projective point needs a nonzero vector");
  rep_ = primitive(v);
}

std::string ProjPoint::to_string() const { return colon_list(rep_); }

ProjPoint point_from_vector(const Vec& v) { return ProjPoint(v); }

Subspace::Subspace(const ProjPoint& p) : ambient_dim_(p.ambient_dim()), basis_(nonzero_rows(rref(Mat::from_rows(std::span(&p.rep(), 1), p.rep().size())))) {}

Subspace Subspace::empty(std::size_t ambient_dim) { return Subspace(ambient_dim, Mat(0, ambient_dim + 1)); }

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(ambient_dim, Mat::identity(ambient_dim + 1)); }

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vec> vectors) {
  const Mat m = Mat::from_rows(vectors, ambient_dim + 1);
  return Subspace(ambient_dim, nonzero_rows(rref(m)));
}

Mat Subspace::annihilator() const {
  if (basis_.rows() == 0) return Mat::identity(ambient_dim_ + 1);
  return kernel_basis(basis_);
}

Hyperplane::Hyperplane(const Vec& covector) {
  if (covector.empty() || is_zero(covector)) throw Error(ErrorCode::ZeroVector, "a hyperplane needs a nonzero covector");
  covector_ = primitive(covector);
}

bool Hyperplane::satisfied_by(const ProjPoint& p) const {
  require_same_dim(ambient_dim(), p.ambient_dim());
  return dot(covector_, p.rep()).is_zero();
}

std::string Hyperplane::to_string() const { return colon_list(covector_); }

Subspace join(std::span<const Subspace> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "join of no parts");
  const std::size_t n = parts.front().ambient_dim();
  std::vector<Vec> rows;
  for (const auto& s : parts) {
    require_same_dim(n, s.ambient_dim());
    for (std::size_t r = 0; r < s.basis().rows(); ++r) rows.push_back(s.basis().row(r));
  }
  return Subspace::span(n, rows);
}

Subspace join(std::initializer_list<Subspace> parts) { return join(std::span(parts.begin(), parts.size())); }

Subspace meet(const Subspace& s1, const Subspace& s2) {
  require_same_dim(s1.ambient_dim(), s2.ambient_dim());
  const std::size_t n = s1.ambient_dim();
  Mat dual = s1.annihilator();
  const Mat other = s2.annihilator();
  for (std::size_t r = 0; r < other.rows(); ++r) dual.append_row(other.row(r));
  const Mat k = kernel_basis(dual);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < k.rows(); ++r) rows.push_back(k.row(r));
  return Subspace::span(n, rows);
}

bool contains(const Subspace& s, const ProjPoint& p) {
  require_same_dim(s.ambient_dim(), p.ambient_dim());
  Mat stacked = s.basis();
  stacked.append_row(p.rep());
  return rank(stacked) == s.basis().rows();
}

bool contains(const Subspace& s, const Subspace& t) {
  require_same_dim(s.ambient_dim(), t.ambient_dim());
  return join({s, t}) == s;
}

Subspace hyperplane_to_subspace(const Hyperplane& h) {
  const Mat k = kernel_basis(Mat::from_rows(std::span(&h.covector(), 1), h.covector().size()));
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < k.rows(); ++r) rows.push_back(k.row(r));
  return Subspace::span(h.ambient_dim(), rows);
}

Hyperplane subspace_to_hyperplane(const Subspace& s) {
  if (s.dim() != static_cast<long>(s.ambient_dim()) - 1) {
    throw Error(ErrorCode::NotAHyperplane, "subspace has dimension " + std::to_string(s.dim()) + " in P_" +
                                               std::to_string(s.ambient_dim()));
  }
  return Hyperplane(s.annihilator().row(0));
}

bool generic_position(std::span<const ProjPoint> points) {
  if (points.empty()) return true;
  const std::size_t n = points.front().ambient_dim();
  for (const auto& p : points) require_same_dim(n, p.ambient_dim());

  const std::size_t k = points.size();
  if (k <= n + 1) {
    std::vector<Vec> rows;
    for (const auto& p : points) rows.push_back(p.rep());
    return rank(Mat::from_rows(rows, n + 1)) == k;
  }

  // Walk all (n+1)-subsets in lexicographic order.
  std::vector<std::size_t> idx(n + 1);
  for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
  while (true) {
    Mat m(0, n + 1);
    for (auto i : idx) m.append_row(points[i].rep());
    if (det(m).is_zero()) return false;

    std::size_t pos = n + 1;
    while (pos > 0 && idx[pos - 1] == k - (n + 1) + (pos - 1)) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t j = pos; j <= n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.to_string(); }

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  return os << "Subspace(dim=" << s.dim() << ", basis=" << s.basis() << ")";
}

std::ostream& operator<<(std::ostream& os, const Hyperplane& h) { return os << h.to_string(); }

}  // namespace projframe
