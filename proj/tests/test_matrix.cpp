#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tsrforge/matrix.hpp"

using namespace tsrforge;

namespace {
FieldCtx gf(std::uint64_t q) {
  auto pp = prime_power_decompose(q);
  REQUIRE(pp.has_value());
  if (pp->second == 1) return make_prime_field(q);
  return default_extension(make_prime_field(pp->first), pp->second);
}
}  // namespace

TEST_CASE("matrix arithmetic basics") {
  FieldCtx f2 = make_prime_field(2);
  Matrix a = Matrix::from_ints(f2, {{0, 1}, {1, 1}});
  CHECK(Matrix::identity(f2, 2) * a == a);
  CHECK(Matrix::zero(f2, 2, 2) + a == a);
  CHECK(a * a == Matrix::from_ints(f2, {{1, 1}, {1, 0}}));
  CHECK(a.transpose() == Matrix::from_ints(f2, {{0, 1}, {1, 1}}));
  CHECK_THROWS_AS(a * Matrix::identity(f2, 3), Error);
  CHECK_THROWS_AS(a + Matrix::zero(f2, 2, 3), Error);
}

TEST_CASE("determinant examples") {
  CHECK(det(Matrix::identity(make_prime_field(5), 3)).prime_value() == 1);
  FieldCtx f3 = make_prime_field(3);
  CHECK(det(Matrix::from_ints(f3, {{0, 1}, {1, 1}})).prime_value() == 2);
  FieldCtx f2 = make_prime_field(2);
  CHECK(det(Matrix::from_ints(f2, {{1, 1}, {1, 1}})).is_zero());
  CHECK_THROWS_AS(det(Matrix::zero(f2, 2, 3)), Error);
}

TEST_CASE("determinant is multiplicative") {
  FieldCtx f2 = make_prime_field(2);
  for (std::uint64_t i = 0; i < 16; ++i)
    for (std::uint64_t j = 0; j < 16; ++j) {
      Matrix a(f2, 2, 2), b(f2, 2, 2);
      std::uint64_t ri = i, rj = j;
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
          a.set(r, c, f2.element_at(ri % 2));
          b.set(r, c, f2.element_at(rj % 2));
          ri /= 2;
          rj /= 2;
        }
      CHECK(det(a * b) == det(a) * det(b));
    }
  oracle::Rng rng;
  for (std::uint64_t q : {3ull, 4ull, 5ull}) {
    FieldCtx f = gf(q);
    for (int i = 0; i < 100; ++i) {
      Matrix a = rng.matrix(f, 3), b = rng.matrix(f, 3);
      CHECK(det(a * b) == det(a) * det(b));
    }
  }
}

TEST_CASE("characteristic polynomial examples") {
  FieldCtx f3 = make_prime_field(3);
  CHECK(char_poly(Matrix::from_ints(f3, {{0, 1}, {1, 1}})) ==
        Poly::from_ints(f3, {2, 2, 1}));  // x^2 - x - 1
  FieldCtx f2 = make_prime_field(2);
  CHECK(char_poly(Matrix::identity(f2, 2)) == Poly::from_ints(f2, {1, 0, 1}));
  CHECK(char_poly(Matrix::from_ints(f2, {{1}})) == Poly::from_ints(f2, {1, 1}));
}

TEST_CASE("characteristic polynomial against the cofactor oracle") {
  oracle::Rng rng;
  for (std::uint64_t q : {2ull, 3ull, 4ull}) {
    FieldCtx f = gf(q);
    for (std::size_t n = 1; n <= 4; ++n)
      for (int i = 0; i < 40; ++i) {
        Matrix a = rng.matrix(f, n);
        CHECK(char_poly(a) == oracle::char_poly_cofactor(a));
      }
  }
}

TEST_CASE("characteristic polynomial evaluates like det(xI - A)") {
  oracle::Rng rng;
  for (std::uint64_t q : {2ull, 3ull, 4ull}) {
    FieldCtx f = gf(q);
    for (std::size_t n = 1; n <= 6; ++n)
      for (int i = 0; i < 15; ++i) {
        Matrix a = rng.matrix(f, n);
        Poly cp = char_poly(a);
        CHECK(cp.is_monic());
        CHECK(cp.degree() == static_cast<int>(n));
        for (auto& x : enumerate_elements(f)) {
          Matrix xi = Matrix::identity(f, n) * x - a;
          CHECK(cp.eval(x) == det(xi));
        }
      }
  }
}

TEST_CASE("companion matrices") {
  FieldCtx f3 = make_prime_field(3);
  Matrix c1 = companion(Poly::from_ints(f3, {2, 1}));  // x + 2 -> [-2] = [1]
  CHECK(c1.rows() == 1);
  CHECK(c1.at(0, 0).prime_value() == 1);
  FieldCtx f2 = make_prime_field(2);
  CHECK(companion(Poly::from_ints(f2, {1, 1, 1})) == Matrix::from_ints(f2, {{0, 1}, {1, 1}}));
  oracle::Rng rng;
  for (std::uint64_t q : {2ull, 3ull, 5ull}) {
    FieldCtx f = gf(q);
    for (int i = 0; i < 100; ++i) {
      std::size_t d = 1 + rng.below(5);
      Poly p = rng.monic(f, d);
      Matrix c = companion(p);
      CHECK(char_poly(c) == p);
      FieldElem expect = p.coeff(0);
      if (d % 2 == 1) expect = -expect;
      CHECK(det(c) == expect);  // det = (-1)^d f(0)
    }
  }
  CHECK_THROWS_AS(companion(Poly::from_ints(f3, {1, 1, 2})), Error);  // not monic
}

TEST_CASE("general linear group sizes") {
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 3) == 48);
  CHECK(gl_order(1, 7) == 6);
  CHECK(gl_order(3, 2) == 168);
  // brute force over all 2x2 matrices over GF(2)
  FieldCtx f2 = make_prime_field(2);
  int inv = 0;
  for (std::uint64_t i = 0; i < 16; ++i) {
    Matrix a(f2, 2, 2);
    std::uint64_t r = i;
    for (std::size_t rr = 0; rr < 2; ++rr)
      for (std::size_t cc = 0; cc < 2; ++cc) {
        a.set(rr, cc, f2.element_at(r % 2));
        r /= 2;
      }
    if (is_invertible(a)) ++inv;
  }
  CHECK(inv == 6);
  CHECK_THROWS_AS(gl_order(2, 6), Error);  // not a prime power
}

TEST_CASE("GL enumeration") {
  FieldCtx f3 = make_prime_field(3);
  auto gl1 = enumerate_gl(1, f3);
  REQUIRE(gl1.size() == 2);
  CHECK(gl1[0].at(0, 0).prime_value() == 1);
  CHECK(gl1[1].at(0, 0).prime_value() == 2);
  struct Cell {
    std::size_t m;
    std::uint64_t q;
  };
  for (auto [m, q] : {Cell{1, 2}, Cell{1, 3}, Cell{2, 2}, Cell{2, 3}, Cell{2, 4}, Cell{3, 2}}) {
    FieldCtx f = gf(q);
    std::size_t count = 0;
    for_each_gl(m, f, [&](const Matrix&) { ++count; });
    CHECK(count == gl_order(m, q));
  }
  CHECK_THROWS_AS(enumerate_gl(3, gf(9), 1000), Error);  // ceiling
}
