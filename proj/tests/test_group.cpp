#include <doctest.h>

#include "projframe/error.hpp"
#include "projframe/generators.hpp"
#include "projframe/group.hpp"
#include "projframe/linalg.hpp"

using namespace projframe;

namespace {

const ProjPoint kCenter{1, 0, 0};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

Mat diag(std::initializer_list<Rational> d) {
  Mat m(d.size(), d.size());
  std::size_t i = 0;
  for (const auto& x : d) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_SUITE("group elements") {
  TEST_CASE("construction and canonical form") {
    CHECK(code_of([] { (void)GroupElement(kCenter, Mat{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}); }) == ErrorCode::Singular);
    CHECK(code_of([] { (void)GroupElement(kCenter, Mat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}); }) ==
          ErrorCode::NotInStabilizer);
    CHECK(GroupElement(kCenter, diag({2, 6, 6})) == GroupElement(kCenter, diag({1, 3, 3})));
    CHECK(GroupElement(kCenter, diag({-2, -2, -2})) == GroupElement::identity(kCenter));
    CHECK(GroupElement(kCenter, diag({Rational(1, 2), 1, Rational(3, 2)})).matrix() == diag({1, 2, 3}));
  }

  TEST_CASE("element_from_frame_pair examples") {
    const AdaptedFrame s = AdaptedFrame::standard(2);
    CHECK(element_from_frame_pair(s, s) == GroupElement::identity(kCenter));
    const AdaptedFrame mate = gen_perspective_mate(s, 3, {1, 2});
    const GroupElement g = element_from_frame_pair(s, mate);
    CHECK(g.matrix() == Mat::from_columns(std::vector<Vec>{{1, 0, 0}, {1, 3, 0}, {2, 0, 3}}, 3));
    CHECK(act_on_frame(g, s) == mate);
  }

  TEST_CASE("action examples") {
    const GroupElement id = GroupElement::identity(kCenter);
    CHECK(act_on_point(id, {4, -1, 2}) == ProjPoint{4, -1, 2});
    CHECK(act_on_point(GroupElement(kCenter, diag({1, 3, 3})), {1, 1, 1}) == ProjPoint{1, 3, 3});
    const AdaptedFrame s = AdaptedFrame::standard(2);
    CHECK(act_on_frame(id, s) == s);
    Rng rng(41);
    for (int t = 0; t < 20; ++t) CHECK(act_on_point(gen_group_element(s, rng, 5), kCenter) == kCenter);
  }

  TEST_CASE("linear part examples") {
    const AdaptedFrame s = AdaptedFrame::standard(2);
    CHECK(linear_part(GroupElement::identity(kCenter)) == Mat::identity(2));
    const GroupElement g = element_from_frame_pair(s, gen_perspective_mate(s, 3, {1, 2}));
    CHECK(linear_part(g) == Mat{{3, 0}, {0, 3}});
    CHECK(linear_part(g, s) == Mat{{3, 0}, {0, 3}});
  }

  TEST_CASE("H membership examples") {
    CHECK(is_in_H(GroupElement::identity(kCenter)));
    CHECK(is_in_H(GroupElement(ProjPoint{1, 0, 0, 0}, Mat{{1, 4, -2, 7}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})));
    CHECK_FALSE(is_in_H(GroupElement(ProjPoint{1, 0, 0, 0}, diag({1, 2, 2, 2}))));
    const AdaptedFrame s = AdaptedFrame::standard(2);
    const GroupElement k = h_element(s, {5, -3});
    CHECK(is_in_H(k));
    CHECK(transition(s, act_on_frame(k, s)).alpha_mat == Mat::identity(2));
    CHECK(transition(s, act_on_frame(k, s)).alpha_cov == Vec{5, -3});
  }
}

TEST_SUITE("tangent bases and equivalence") {
  TEST_CASE("examples") {
    const AdaptedFrame s = AdaptedFrame::standard(2);
    CHECK(tangent_basis(s, s).jac == Mat::identity(2));
    CHECK(tangent_basis(gen_perspective_mate(s, 3, {1, 2}), s).jac == Mat{{3, 0}, {0, 3}});
    CHECK(is_equivalent(s, s));
    CHECK_FALSE(is_equivalent(s, gen_perspective_mate(s, 3, {1, 2})));
    CHECK(is_equivalent(s, gen_perspective_mate(s, 1, {1, 2})));
  }

  TEST_CASE("random H elements preserve the orbit") {
    Rng rng(42);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 2 + rng.uniform(0, 3);
      const AdaptedFrame r = gen_adapted_frame(n, rng, 4);
      const GroupElement k = gen_h_element(r, rng, 4);
      const AdaptedFrame r2 = act_on_frame(k, r);
      CHECK(is_equivalent(r, r2));
      CHECK(is_equivalent(r, r2, gen_adapted_frame(n, rng, 4)));
      CHECK(tangent_basis(r, AdaptedFrame::standard(n)) == tangent_basis(r2, AdaptedFrame::standard(n)));
    }
  }
}

TEST_SUITE("group properties") {
  TEST_CASE("homomorphism, kernel, equivariance, freeness") {
    Rng rng(43);
    for (int t = 0; t < 80; ++t) {
      const std::size_t n = 2 + rng.uniform(0, 3);
      const AdaptedFrame ref = AdaptedFrame::standard(n);
      const AdaptedFrame r = gen_adapted_frame(n, rng, 4);
      const AdaptedFrame other = gen_adapted_frame(n, rng, 4);
      const GroupElement g1 = gen_group_element(ref, rng, 4);
      const GroupElement g2 = gen_group_element(ref, rng, 4);
      const GroupElement id = GroupElement::identity(ref.center());
      const Mat idn = Mat::identity(n);

      CHECK(act_on_frame(g1 * g2, r) == act_on_frame(g1, act_on_frame(g2, r)));
      CHECK(g1 * g1.inverse() == id);
      CHECK(linear_part(g1 * g2) == linear_part(g1) * linear_part(g2));
      CHECK(linear_part(g1.inverse()) == inverse(linear_part(g1)));
      CHECK(is_in_H(g1) == (linear_part(g1) == idn));
      CHECK(is_in_H(g1 * gen_h_element(ref, rng, 4) * g1.inverse()));
      CHECK(tangent_basis(act_on_frame(g1, r), ref).jac == linear_part(g1) * tangent_basis(r, ref).jac);

      const GroupElement g = element_from_frame_pair(r, other);
      CHECK(act_on_frame(g, r) == other);
      CHECK(element_from_frame_pair(r, act_on_frame(g1, r)) == g1);
      CHECK(element_from_frame_pair(r, r) == id);

      // Linear parts relative to another adapted frame are conjugate, so
      // membership in H does not depend on the reference.
      const Mat lr = linear_part(g1, r);
      const Mat conj = tangent_basis(r, ref).jac;
      CHECK(lr == inverse(conj) * linear_part(g1) * conj);
      CHECK((lr == idn) == is_in_H(g1));
    }
  }
}
