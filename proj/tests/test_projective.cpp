#include <doctest.h>

#include <vector>

#include "oracle.hpp"
#include "projframe/error.hpp"
#include "projframe/linalg.hpp"
#include "projframe/projective.hpp"
#include "projframe/random.hpp"

using namespace projframe;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

ProjPoint random_point(Rng& rng, std::size_t n, std::int64_t bound) {
  for (;;) {
    Vec v(n + 1);
    for (auto& x : v) x = rng.uniform(-bound, bound);
    if (!is_zero(v)) return ProjPoint(v);
  }
}

Subspace random_subspace(Rng& rng, std::size_t n, std::size_t points, std::int64_t bound) {
  std::vector<Subspace> parts;
  for (std::size_t i = 0; i < points; ++i) parts.emplace_back(random_point(rng, n, bound));
  return join(parts);
}

}  // namespace

TEST_SUITE("points") {
  TEST_CASE("canonical representatives") {
    CHECK(point_from_vector({2, 0, 0}).rep() == Vec{1, 0, 0});
    CHECK(point_from_vector({-1, -2, -3}).rep() == Vec{1, 2, 3});
    CHECK(point_from_vector({Rational(1, 2), Rational(1, 3), 0}).rep() == Vec{3, 2, 0});
    CHECK(ProjPoint{0, 2, -1}.to_string() == "(0:2:-1)");
    CHECK(code_of([] { (void)point_from_vector({0, 0, 0}); }) == ErrorCode::ZeroVector);
  }

  TEST_CASE("scale invariance") {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
      const ProjPoint p = random_point(rng, 3, 7);
      Rational c(rng.nonzero(9), rng.uniform(1, 5));
      CHECK(point_from_vector(scale(p.rep(), c)) == p);
    }
  }
}

TEST_SUITE("join and meet") {
  TEST_CASE("join examples") {
    const Subspace single = join({ProjPoint{1, 2, 3}});
    CHECK(single.dim() == 0);
    CHECK(contains(single, ProjPoint{2, 4, 6}));

    const Subspace line = join({ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}});
    CHECK(line.dim() == 1);
    CHECK(line == hyperplane_to_subspace(Hyperplane({0, 0, 1})));

    CHECK(join({ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, ProjPoint{0, 0, 1}}) == Subspace::full(2));
    CHECK(code_of([] { (void)join({ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0, 0}}); }) == ErrorCode::MixedDimensions);
  }

  TEST_CASE("meet examples") {
    const Subspace x0 = hyperplane_to_subspace(Hyperplane({1, 0, 0}));
    const Subspace x1 = hyperplane_to_subspace(Hyperplane({0, 1, 0}));
    CHECK(meet(x0, x0) == x0);
    const Subspace p = meet(x0, x1);
    CHECK(p.dim() == 0);
    CHECK(p == Subspace(ProjPoint{0, 0, 1}));

    const Subspace l1 = join({ProjPoint{1, 0, 0, 0}, ProjPoint{0, 1, 0, 0}});
    const Subspace l2 = join({ProjPoint{0, 0, 1, 0}, ProjPoint{0, 0, 0, 1}});
    CHECK(meet(l1, l2).is_empty());
    CHECK(meet(l1, l2).dim() == -1);
  }

  TEST_CASE("meet of lines in P_2 agrees with the cross product") {
    Rng rng(22);
    for (int t = 0; t < 100; ++t) {
      const ProjPoint a = random_point(rng, 2, 5), b = random_point(rng, 2, 5);
      const ProjPoint c = random_point(rng, 2, 5), d = random_point(rng, 2, 5);
      if (a == b || c == d) continue;
      const Vec l1 = oracle::cross(a.rep(), b.rep());
      const Vec l2 = oracle::cross(c.rep(), d.rep());
      const Vec x = oracle::cross(l1, l2);
      const Subspace m = meet(join({a, b}), join({c, d}));
      if (is_zero(x)) {
        CHECK(m.dim() == 1);
      } else {
        CHECK(m == Subspace(ProjPoint(x)));
      }
    }
  }

  TEST_CASE("lattice laws and the dimension formula") {
    Rng rng(23);
    for (int t = 0; t < 80; ++t) {
      const std::size_t n = 2 + rng.uniform(0, 3);
      const Subspace s = random_subspace(rng, n, 1 + rng.uniform(0, n - 1), 3);
      const Subspace u = random_subspace(rng, n, 1 + rng.uniform(0, n - 1), 3);
      CHECK(join({s, meet(s, u)}) == s);
      CHECK(meet(s, join({s, u})) == s);
      CHECK(join({s, u}) == join({u, s}));
      CHECK(meet(s, u) == meet(u, s));
      CHECK(join({s, s}) == s);
      CHECK(contains(join({s, u}), s));
      CHECK(contains(s, meet(s, u)));
      CHECK(join({s, u}).dim() + meet(s, u).dim() == s.dim() + u.dim());
    }
  }
}

TEST_SUITE("incidence") {
  TEST_CASE("examples") {
    CHECK(contains(Subspace::full(2), ProjPoint{3, -1, 7}));
    CHECK_FALSE(contains(hyperplane_to_subspace(Hyperplane({1, 0, 0})), ProjPoint{1, 0, 0}));
    CHECK(contains(hyperplane_to_subspace(Hyperplane({-2, 1, 2})), ProjPoint{0, 2, -1}));
    CHECK(Hyperplane({-2, 1, 2}).satisfied_by(ProjPoint{0, 2, -1}));
    CHECK(code_of([] { (void)contains(Subspace::full(2), ProjPoint{1, 0}); }) == ErrorCode::MixedDimensions);
  }

  TEST_CASE("membership matches the equation") {
    Rng rng(24);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 2 + rng.uniform(0, 3);
      Vec c(n + 1);
      for (auto& x : c) x = rng.uniform(-3, 3);
      if (is_zero(c)) continue;
      const Hyperplane h(c);
      const ProjPoint p = random_point(rng, n, 2);
      CHECK(contains(hyperplane_to_subspace(h), p) == dot(c, p.rep()).is_zero());
    }
  }
}

TEST_SUITE("hyperplanes") {
  TEST_CASE("conversions") {
    CHECK(hyperplane_to_subspace(Hyperplane({1, 0, 0})) == join({ProjPoint{0, 1, 0}, ProjPoint{0, 0, 1}}));
    const Subspace l = join({ProjPoint{1, 0, 1}, ProjPoint{0, 2, -1}});
    CHECK(hyperplane_to_subspace(Hyperplane({-2, 1, 2})) == l);
    CHECK(subspace_to_hyperplane(l) == Hyperplane({-2, 1, 2}));
    CHECK(Hyperplane({-2, 1, 2}) == Hyperplane({4, -2, -4}));
    CHECK(Hyperplane({-2, 1, 2}).covector() == Vec{2, -1, -2});
    CHECK(code_of([] { (void)subspace_to_hyperplane(Subspace(ProjPoint{1, 0, 0})); }) == ErrorCode::NotAHyperplane);
    CHECK(code_of([] { (void)Hyperplane({0, 0, 0}); }) == ErrorCode::ZeroVector);
  }

  TEST_CASE("duality round trips") {
    Rng rng(25);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 2 + rng.uniform(0, 3);
      Vec c(n + 1);
      for (auto& x : c) x = Rational(rng.uniform(-4, 4), rng.uniform(1, 3));
      if (is_zero(c)) continue;
      const Hyperplane h(c);
      const Subspace s = hyperplane_to_subspace(h);
      CHECK(s.dim() == static_cast<long>(n) - 1);
      CHECK(subspace_to_hyperplane(s) == h);
      CHECK(hyperplane_to_subspace(subspace_to_hyperplane(s)) == s);
    }
  }
}

TEST_SUITE("generic position") {
  TEST_CASE("examples") {
    const std::vector<ProjPoint> standard{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    CHECK(generic_position(standard));
    const std::vector<ProjPoint> flat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
    CHECK_FALSE(generic_position(flat));
    const std::vector<ProjPoint> repeated{{1, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}};
    CHECK_FALSE(generic_position(repeated));
    const std::vector<ProjPoint> independent{{1, 0, 0, 0}, {0, 1, 0, 1}};
    CHECK(generic_position(independent));
  }

  TEST_CASE("agrees with subset determinants") {
    Rng rng(26);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 2 + rng.uniform(0, 1);
      std::vector<ProjPoint> pts;
      for (std::size_t i = 0; i < n + 2; ++i) pts.push_back(random_point(rng, n, 2));
      bool expected = true;
      for (std::size_t skip = 0; skip < n + 2; ++skip) {
        Mat m(0, n + 1);
        for (std::size_t i = 0; i < n + 2; ++i) {
          if (i != skip) m.append_row(pts[i].rep());
        }
        expected = expected && !oracle::cofactor_det(m).is_zero();
      }
      CHECK(generic_position(pts) == expected);
    }
  }
}
