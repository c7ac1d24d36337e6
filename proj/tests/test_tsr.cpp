#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "tsrforge/counting.hpp"
#include "tsrforge/tsr.hpp"

using namespace tsrforge;

namespace {
FieldCtx gf(std::uint64_t q) {
  auto pp = prime_power_decompose(q);
  REQUIRE(pp.has_value());
  if (pp->second == 1) return make_prime_field(q);
  return default_extension(make_prime_field(pp->first), pp->second);
}

TsrStar fib_tsr() {
  // order-two register over GF(3) with state matrix [[0,1],[1,1]]
  FieldCtx f3 = make_prime_field(3);
  return TsrStar(1, 2, Poly::from_ints(f3, {1, 1}), Matrix::from_ints(f3, {{1}}));
}

TsrStar quartic_tsr() {
  FieldCtx f2 = make_prime_field(2);
  return TsrStar(2, 2, Poly::from_ints(f2, {1, 1}),
                 companion(Poly::from_ints(f2, {1, 1, 1})));
}
}  // namespace

TEST_CASE("construction validates the normal form") {
  FieldCtx f2 = make_prime_field(2);
  Matrix id = Matrix::identity(f2, 1);
  CHECK_THROWS_AS(TsrStar(1, 1, Poly::from_ints(f2, {1}), id), Error);          // max(m,n) > 1
  CHECK_THROWS_AS(TsrStar(1, 2, Poly::from_ints(f2, {0, 1}), id), Error);       // g(0) != 1
  CHECK_THROWS_AS(TsrStar(1, 2, Poly::from_ints(f2, {1, 1, 1}), id), Error);    // deg g > n-1
  CHECK_THROWS_AS(TsrStar(2, 2, Poly::from_ints(f2, {1}),
                          Matrix::from_ints(f2, {{1, 1}, {1, 1}})), Error);     // singular A
}

TEST_CASE("assembled state matrices") {
  TsrStar t = fib_tsr();
  CHECK(assemble(t) == Matrix::from_ints(make_prime_field(3), {{0, 1}, {1, 1}}));

  // n = 1 collapses to the block itself
  FieldCtx f2 = make_prime_field(2);
  Matrix a = Matrix::from_ints(f2, {{0, 1}, {1, 1}});
  TsrStar t1(2, 1, Poly::from_ints(f2, {1}), a);
  CHECK(assemble(t1) == a);

  // m = n = 2 block layout: (0 A; I A)
  TsrStar t2 = quartic_tsr();
  CHECK(assemble(t2) == Matrix::from_ints(f2, {{0, 0, 0, 1},
                                               {0, 0, 1, 1},
                                               {1, 0, 0, 1},
                                               {0, 1, 1, 1}}));

  // general form with arbitrary c and B, including c_0
  FieldCtx f3 = make_prime_field(3);
  TsrGeneral tg(1, 2, {f3.from_integer(2), f3.from_integer(1)}, Matrix::from_ints(f3, {{2}}));
  CHECK(assemble(tg) == Matrix::from_ints(f3, {{0, 1}, {1, 2}}));
}

TEST_CASE("fast characteristic polynomial equals the matrix route") {
  TsrStar t = fib_tsr();
  Poly phi = tsr_char_poly(t);
  CHECK(phi == Poly::from_ints(make_prime_field(3), {2, 2, 1}));  // x^2-x-1
  CHECK(phi == char_poly(assemble(t)));

  TsrStar t2 = quartic_tsr();
  CHECK(tsr_char_poly(t2) == Poly::from_ints(make_prime_field(2), {1, 0, 0, 1, 1}));
  CHECK(tsr_char_poly(t2) == char_poly(assemble(t2)));

  // g = 1 gives phi_A(X^n)
  FieldCtx f2 = make_prime_field(2);
  TsrStar t3(2, 3, Poly::from_ints(f2, {1}), companion(Poly::from_ints(f2, {1, 1, 1})));
  CHECK(tsr_char_poly(t3) == Poly::from_ints(f2, {1, 0, 0, 1, 0, 0, 1}));
}

TEST_CASE("fast equals slow across small parameter cells") {
  struct Cell {
    std::size_t m, n;
    std::uint64_t q;
  };
  for (auto [m, n, q] : {Cell{1, 2, 2}, Cell{1, 2, 3}, Cell{1, 2, 4}, Cell{1, 3, 2},
                         Cell{1, 3, 3}, Cell{2, 1, 2}, Cell{2, 1, 3}, Cell{2, 2, 2},
                         Cell{2, 2, 3}, Cell{2, 2, 4}, Cell{2, 3, 2}, Cell{3, 1, 2},
                         Cell{3, 2, 2}}) {
    FieldCtx f = gf(q);
    for_each_tsr(m, n, f, TsrFilter::All, [&](const TsrStar& t, const Poly& phi) {
      CHECK(phi == char_poly(assemble(t)));
    });
  }
}

TEST_CASE("classification") {
  Classification c = classify(fib_tsr());
  CHECK(c.irreducible);
  CHECK(c.primitive);

  FieldCtx f2 = make_prime_field(2);
  TsrStar sq(1, 2, Poly::from_ints(f2, {1}), Matrix::from_ints(f2, {{1}}));
  Classification c2 = classify(sq);  // phi = x^2+1 = (x+1)^2
  CHECK_FALSE(c2.irreducible);
  CHECK_FALSE(c2.primitive);

  Classification c3 = classify(quartic_tsr());
  CHECK(c3.irreducible);
  CHECK(c3.primitive);
}

TEST_CASE("the primitive register whose block polynomial is not primitive") {
  TsrStar t = fib_tsr();
  CHECK(classify(t).primitive);
  Poly block = char_poly(t.a);  // x - 1 over GF(3)
  CHECK(block == Poly::from_ints(make_prime_field(3), {2, 1}));
  CHECK_FALSE(is_primitive_poly(block));
}

TEST_CASE("state stepping and periods") {
  TsrStar t = fib_tsr();
  FieldCtx f3 = t.ctx();
  std::vector<FieldElem> zero{f3.zero(), f3.zero()};
  CHECK(step(t, zero) == zero);
  auto seq = sequence(t, {f3.one(), f3.zero()}, 9);
  CHECK(seq.size() == 9);
  std::size_t period = 0;
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] == seq[0]) {
      period = i;
      break;
    }
  CHECK(period == 8);  // primitive quadratic over GF(3)

  TsrStar t2 = quartic_tsr();
  FieldCtx f2 = t2.ctx();
  std::vector<FieldElem> seed{f2.one(), f2.zero(), f2.zero(), f2.zero()};
  auto seq2 = sequence(t2, seed, 16);
  std::size_t period2 = 0;
  for (std::size_t i = 1; i < seq2.size(); ++i)
    if (seq2[i] == seq2[0]) {
      period2 = i;
      break;
    }
  CHECK(period2 == 15);
  CHECK_THROWS_AS(step(t2, zero), Error);  // wrong length
}

TEST_CASE("enumeration counts and determinism") {
  FieldCtx f2 = make_prime_field(2);
  auto all = enumerate_tsr(2, 2, f2, TsrFilter::All);
  CHECK(all.size() == 12);
  auto irr = enumerate_tsr(2, 2, f2, TsrFilter::Irreducible);
  REQUIRE(irr.size() == 2);
  for (auto& [t, phi] : irr) CHECK(phi.str() == "x^4+x^3+1");

  FieldCtx f3 = make_prime_field(3);
  CHECK(enumerate_tsr(2, 2, f3, TsrFilter::All).size() == 144);
  CHECK(enumerate_tsr(2, 2, f3, TsrFilter::Irreducible).size() == 36);

  CHECK_THROWS_AS(enumerate_tsr(1, 1, f2, TsrFilter::All), Error);
  CHECK_THROWS_AS(enumerate_tsr(3, 3, f3, TsrFilter::All, 1000), Error);  // ceiling
}

TEST_CASE("frozen fiber table for the 12 order-two registers over GF(2)") {
  FieldCtx f2 = make_prime_field(2);
  std::map<std::string, int> fibers;
  for_each_tsr(2, 2, f2, TsrFilter::All,
               [&](const TsrStar&, const Poly& phi) { ++fibers[phi.str()]; });
  REQUIRE(fibers.size() == 3);
  CHECK(fibers["x^4+x^3+1"] == 2);
  CHECK(fibers["x^4+x^2+1"] == 6);
  CHECK(fibers["x^4+1"] == 4);
}

TEST_CASE("block polynomial of an irreducible register is irreducible") {
  struct Cell {
    std::size_t m, n;
    std::uint64_t q;
  };
  for (auto [m, n, q] : {Cell{2, 2, 2}, Cell{2, 2, 3}, Cell{1, 2, 3}, Cell{3, 2, 2},
                         Cell{2, 3, 2}}) {
    FieldCtx f = gf(q);
    for_each_tsr(m, n, f, TsrFilter::Irreducible, [&](const TsrStar& t, const Poly& phi) {
      CHECK_FALSE(phi.coeff(0).is_zero());
      CHECK(is_irreducible(char_poly(t.a)));
    });
  }
}

TEST_CASE("sign-twisted block primitivity for primitive registers") {
  struct Cell {
    std::size_t m, n;
    std::uint64_t q;
  };
  for (auto [m, n, q] : {Cell{1, 2, 3}, Cell{2, 2, 2}, Cell{2, 2, 3}, Cell{1, 3, 3},
                         Cell{2, 3, 2}, Cell{3, 1, 2}}) {
    FieldCtx f = gf(q);
    int seen = 0;
    for_each_tsr(m, n, f, TsrFilter::Primitive, [&](const TsrStar& t, const Poly&) {
      ++seen;
      Poly block = char_poly(t.a);
      // (-1)^(m(n+1)) * block((-1)^(n+1) X) must be primitive
      std::vector<FieldElem> c;
      bool flip_arg = (n + 1) % 2 == 1;
      bool flip_all = (m * (n + 1)) % 2 == 1;
      for (std::size_t i = 0; i < block.coeffs().size(); ++i) {
        FieldElem ci = block.coeffs()[i];
        if (flip_arg && i % 2 == 1) ci = -ci;
        if (flip_all) ci = -ci;
        c.push_back(ci);
      }
      Poly twisted(f, c);
      CHECK(is_primitive_poly(twisted));
      if (q % 2 == 0 || n % 2 == 1) CHECK(is_primitive_poly(block));
    });
    if (m == 1 && n == 2 && q == 3) CHECK(seen > 0);
  }
}

TEST_CASE("decompositions") {
  FieldCtx f2 = make_prime_field(2);
  CHECK(decompose(Poly::from_ints(f2, {1, 1, 0, 0, 1}), 2, 2).empty());

  auto ds = decompose(Poly::from_ints(f2, {1, 0, 0, 1, 1}), 2, 2);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].g == Poly::from_ints(f2, {1, 1}));
  CHECK(ds[0].h == Poly::from_ints(f2, {1, 1, 1}));

  auto ds2 = decompose(Poly::from_ints(f2, {1, 0, 1, 0, 1}), 2, 2);
  CHECK(ds2.size() == 2);  // x^4+x^2+1 splits through both g = 1 and g = 1+x

  CHECK_THROWS_AS(decompose(Poly::from_ints(f2, {1, 1, 1}), 2, 2), Error);       // degree
  CHECK_THROWS_AS(decompose(Poly::from_ints(f2, {0, 1, 0, 0, 1}), 2, 2), Error); // f(0) = 0
}

TEST_CASE("decompose agrees with the double-loop scan") {
  for (std::uint64_t q : {2ull, 3ull}) {
    FieldCtx f = gf(q);
    std::uint64_t total = checked_pow(q, 4);
    for (std::uint64_t i = 0; i < total; ++i) {
      Poly cand = oracle::monic_by_index(f, 4, i);
      if (cand.coeff(0).is_zero()) continue;
      auto fast = decompose(cand, 2, 2);
      auto slow = oracle::decompose_bruteforce(cand, 2, 2);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t k = 0; k < fast.size(); ++k) {
        CHECK(fast[k].g == slow[k].first);
        CHECK(fast[k].h == slow[k].second);
        CHECK(mn_compose(fast[k].g, fast[k].h, 2, 2) == cand);
      }
    }
  }
}

TEST_CASE("irreducible decomposable polynomials decompose uniquely") {
  FieldCtx f2 = make_prime_field(2);
  for (const Poly& f : enumerate_monic_irreducible(f2, 4)) {
    auto ds = decompose(f, 2, 2);
    CHECK(ds.size() <= 1);
  }
  FieldCtx f3 = make_prime_field(3);
  for (const Poly& f : enumerate_monic_irreducible(f3, 4)) {
    auto ds = decompose(f, 2, 2);
    CHECK(ds.size() <= 1);
  }
}

TEST_CASE("fiber counts") {
  FieldCtx f2 = make_prime_field(2);
  Poly attainable = Poly::from_ints(f2, {1, 0, 0, 1, 1});
  CHECK(fiber_count(attainable, 2, 2, FiberMode::Bruteforce) == 2);
  CHECK(fiber_count(attainable, 2, 2, FiberMode::Formula) == 2);

  Poly unattainable = Poly::from_ints(f2, {1, 1, 0, 0, 1});
  CHECK(fiber_count(unattainable, 2, 2, FiberMode::Bruteforce) == 0);
  CHECK_THROWS_AS(fiber_count(unattainable, 2, 2, FiberMode::Formula), Error);

  Poly doubly = Poly::from_ints(f2, {1, 0, 1, 0, 1});
  CHECK(fiber_count(doubly, 2, 2, FiberMode::Bruteforce) == 6);
  CHECK_THROWS_AS(fiber_count(doubly, 2, 2, FiberMode::Formula), Error);

  FieldCtx f3 = make_prime_field(3);
  Poly fib = Poly::from_ints(f3, {2, 2, 1});
  CHECK(fiber_count(fib, 1, 2, FiberMode::Bruteforce) == 1);
  CHECK(fiber_count(fib, 1, 2, FiberMode::Formula) == 1);
}

TEST_CASE("conjugate products over the extension") {
  FieldCtx f3 = make_prime_field(3);
  // m = 1: X^n - lambda*g stays in the base field
  Poly g = Poly::from_ints(f3, {1, 1});
  CHECK(gamma(f3.from_integer(1), g, 2) == Poly::from_ints(f3, {-1, -1, 1}));

  FieldCtx f2 = make_prime_field(2);
  FieldCtx f4 = default_extension(f2, 2);
  Poly g2 = Poly::from_ints(f2, {1, 1});
  CHECK(gamma(f4.generator(), g2, 2) == Poly::from_ints(f2, {1, 0, 0, 1, 1}));
  CHECK_THROWS_AS(gamma(f4.one(), g2, 2), Error);  // degree 1, not 2
}

TEST_CASE("irreducible pair enumeration and the orbit structure") {
  FieldCtx f2 = make_prime_field(2);
  auto s22 = enumerate_s(2, 2, f2);
  CHECK(s22.size() == 2);
  FieldCtx f3 = make_prime_field(3);
  CHECK(enumerate_s(2, 2, f3).size() == 12);
  CHECK(enumerate_s(1, 3, f2).size() == count_irreducible(3, 2));

  // images under the conjugate product are exactly the attainable irreducible
  // characteristic polynomials, each hit m times
  std::map<std::string, int> hits;
  for (auto& [lambda, g] : s22) hits[gamma(lambda, g, 2).str()]++;
  std::set<std::string> attained;
  for_each_tsr(2, 2, f2, TsrFilter::Irreducible,
               [&](const TsrStar&, const Poly& phi) { attained.insert(phi.str()); });
  REQUIRE(hits.size() == attained.size());
  for (auto& [s, c] : hits) {
    CHECK(c == 2);
    CHECK(attained.count(s) == 1);
  }
}

TEST_CASE("quadratic irreducibility sets and partitions") {
  FieldCtx f2 = make_prime_field(2);
  auto v21 = enumerate_v(2, f2.one());
  CHECK(v21.size() == 2);
  CHECK(enumerate_v(2, f2.zero()).empty());  // q even, a = 0

  FieldCtx f3 = make_prime_field(3);
  for (std::uint64_t q : {2ull, 3ull}) {
    FieldCtx f = gf(q);
    for (std::size_t t = 2; t <= 3; ++t) {
      for (auto& a : enumerate_elements(f)) {
        ProofPartitions p = proof_partitions(t, a);
        CHECK(p.z.size() == p.x.size() + p.y.size());
        CHECK(p.z.size() == p.u.size() + p.v.size());
        bool degenerate = (q % 2 == 0 && a.is_zero());
        CHECK((p.v.empty() == degenerate));
        if (!degenerate) CHECK(p.x.size() == 2 * p.u.size());
      }
    }
  }
  CHECK_THROWS_AS(proof_partitions(1, f3.one()), Error);
}

TEST_CASE("halving identity linking consecutive levels") {
  // y_{2t} = 2 v_t for valid a
  for (std::uint64_t q : {2ull, 3ull}) {
    FieldCtx f = gf(q);
    for (std::size_t t = 2; t <= 3; ++t) {
      if (checked_pow(q, 2 * t) > 4096) continue;
      for (auto& a : enumerate_elements(f)) {
        if (q % 2 == 0 && a.is_zero()) continue;
        ProofPartitions lo = proof_partitions(t, a);
        ProofPartitions hi = proof_partitions(2 * t, a, 8192);
        CHECK(hi.y.size() == 2 * lo.v.size());
      }
    }
  }
}

TEST_CASE("round trips through the JSON-free text surface") {
  TsrStar t = quartic_tsr();
  auto seq = sequence(t, {t.ctx().one(), t.ctx().zero(), t.ctx().zero(), t.ctx().zero()}, 3);
  CHECK(seq[0].size() == 4);
}
