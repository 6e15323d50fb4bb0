#include <doctest.h>

#include "oracle.hpp"
#include "projframe/error.hpp"
#include "projframe/generators.hpp"
#include "projframe/linalg.hpp"
#include "projframe/random.hpp"

using namespace projframe;

namespace {

Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(rng.uniform(-bound, bound), rng.uniform(1, 3));
  }
  return m;
}

// Low-rank matrix: product of random (rows x k) and (k x cols) factors.
Mat random_rank_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  return random_matrix(rng, rows, k, 4) * random_matrix(rng, k, cols, 4);
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("parse and print") {
    CHECK(Rational::parse("3/6").to_string() == "1/2");
    CHECK(Rational::parse("-4").to_string() == "-4");
    CHECK(Rational::parse("-4/2") == Rational(-2));
    CHECK_THROWS_AS(Rational::parse("4/-2"), Error);
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
  }

  TEST_CASE("division by zero reports its code") {
    try {
      (void)(Rational(1) / Rational(0));
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DivisionByZero);
    }
  }

  TEST_CASE("values beyond 64 bits stay exact") {
    Rational big = 1;
    for (int i = 0; i < 40; ++i) big *= 1'000'003;
    CHECK((big + 1) - big == 1);
    CHECK((big / (big + 1)) * ((big + 1) / big) == 1);
  }
}

TEST_SUITE("rref") {
  TEST_CASE("identity") {
    const auto r = rref(Mat::identity(3));
    CHECK(r.reduced == Mat::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("rank one") {
    const auto r = rref(Mat{{1, 2}, {2, 4}});
    CHECK(r.reduced == Mat{{1, 2}, {0, 0}});
    CHECK(r.rank == 1);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0});
  }

  TEST_CASE("row swap") {
    const auto r = rref(Mat{{0, 1}, {1, 0}});
    CHECK(r.reduced == Mat::identity(2));
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("properties on random matrices") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
      const std::size_t rows = 1 + rng.uniform(0, 4);
      const std::size_t cols = 1 + rng.uniform(0, 4);
      const std::size_t k = 1 + rng.uniform(0, 3);
      const Mat m = t % 2 ? random_matrix(rng, rows, cols, 3) : random_rank_matrix(rng, rows, cols, k);
      const auto r = rref(m);
      CHECK(rref(r.reduced).reduced == r.reduced);
      CHECK(r.rank == oracle::minor_rank(m));
      CHECK(r.rank == r.pivot_cols.size());
      for (std::size_t i = 0; i < r.rank; ++i) CHECK(r.reduced(i, r.pivot_cols[i]) == 1);
      // Row space preserved: stacking does not raise the rank.
      Mat both = m;
      for (std::size_t i = 0; i < r.rank; ++i) both.append_row(r.reduced.row(i));
      CHECK(rank(both) == r.rank);
    }
  }
}

TEST_SUITE("kernel") {
  TEST_CASE("examples") {
    CHECK(kernel_basis(Mat::identity(3)).rows() == 0);
    const Mat k = kernel_basis(Mat{{1, 1, 1}});
    CHECK(k.rows() == 2);
    CHECK(rank(k) == 2);
    CHECK((Mat{{1, 1, 1}} * k.transpose()).is_zero());
    CHECK(kernel_basis(Mat(2, 3)) == Mat::identity(3));
  }

  TEST_CASE("rank plus nullity") {
    Rng rng(12);
    for (int t = 0; t < 60; ++t) {
      const std::size_t rows = 1 + rng.uniform(0, 4);
      const std::size_t cols = 1 + rng.uniform(0, 5);
      const Mat m = random_rank_matrix(rng, rows, cols, 1 + rng.uniform(0, 2));
      const Mat k = kernel_basis(m);
      CHECK(rank(m) + k.rows() == cols);
      if (k.rows() > 0) {
        CHECK((m * k.transpose()).is_zero());
        CHECK(rank(k) == k.rows());
      }
    }
  }
}

TEST_SUITE("det") {
  TEST_CASE("examples") {
    CHECK(det(Mat::identity(4)) == 1);
    CHECK(det(Mat{{1, 2}, {3, 4}}) == -2);
    CHECK(det(Mat{{1, 1}, {1, 1}}) == 0);
    CHECK_THROWS_AS(det(Mat(2, 3)), Error);
  }

  TEST_CASE("agrees with cofactor expansion and is multiplicative") {
    Rng rng(13);
    for (int t = 0; t < 80; ++t) {
      const std::size_t n = 1 + rng.uniform(0, 4);
      const Mat a = random_matrix(rng, n, n, 5);
      const Mat b = random_matrix(rng, n, n, 5);
      CHECK(det(a) == oracle::cofactor_det(a));
      CHECK(det(a * b) == det(a) * det(b));
      CHECK(det(a.transpose()) == det(a));
    }
  }
}

TEST_SUITE("solve and inverse") {
  TEST_CASE("examples") {
    const Vec b{5, -7, Rational(1, 3)};
    CHECK(solve(Mat::identity(3), b) == b);
    CHECK(solve(Mat{{2, 0}, {0, 4}}, Vec{1, 1}) == Vec{Rational(1, 2), Rational(1, 4)});
    CHECK(solve(Mat{{1, 1}, {1, -1}}, Vec{3, 1}) == Vec{2, 1});
  }

  TEST_CASE("errors") {
    try {
      (void)solve(Mat{{1, 1}, {1, 1}}, Vec{1, 2});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Singular);
    }
    try {
      (void)inverse(Mat(2, 3));
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonSquare);
    }
  }

  TEST_CASE("round trips") {
    Rng rng(14);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + rng.uniform(0, 4);
      const Mat m = gen_invertible(n, rng, 6);
      Vec b(n);
      for (auto& x : b) x = Rational(rng.uniform(-9, 9), rng.uniform(1, 4));
      CHECK(m * solve(m, b) == b);
      CHECK(m * inverse(m) == Mat::identity(n));
      CHECK(inverse(m) * m == Mat::identity(n));
      CHECK(det(inverse(m)) * det(m) == 1);
    }
  }
}

TEST_SUITE("primitive") {
  TEST_CASE("canonical integer scaling") {
    CHECK(primitive(Vec{2, 0, 0}) == Vec{1, 0, 0});
    CHECK(primitive(Vec{-1, -2, -3}) == Vec{1, 2, 3});
    CHECK(primitive(Vec{Rational(1, 2), Rational(1, 3), 0}) == Vec{3, 2, 0});
    CHECK(primitive(Vec{0, Rational(-4, 6), Rational(2, 9)}) == Vec{0, 3, -1});
  }
}
