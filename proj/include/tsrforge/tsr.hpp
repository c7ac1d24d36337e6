#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tsrforge/matrix.hpp"
#include "tsrforge/poly.hpp"

namespace tsrforge {

/// Invertible transformation shift register in normal form: the pair (g, A)
/// with g(0) = 1, deg g <= n-1 and A an invertible m x m block. The pair
/// determines the mn x mn state transition matrix uniquely.
struct TsrStar {
  std::size_t m, n;
  Poly g;
  Matrix a;

  TsrStar(std::size_t m, std::size_t n, Poly g, Matrix a);
  const FieldCtx& ctx() const noexcept { return g.ctx(); }
};

/// General (possibly singular) block form: last block-column c_i * B.
struct TsrGeneral {
  std::size_t m, n;
  std::vector<FieldElem> c;  // c_0..c_{n-1}
  Matrix b;

  TsrGeneral(std::size_t m, std::size_t n, std::vector<FieldElem> c, Matrix b);
  const FieldCtx& ctx() const noexcept { return b.ctx(); }
};

/// Witness of f == g^m h(X^n/g).
struct Decomposition {
  Poly g, h;
};

Matrix assemble(const TsrStar& t);
Matrix assemble(const TsrGeneral& t);

/// g^m * phi_A(X^n/g), equal to char_poly(assemble(t)) without forming the
/// big matrix.
Poly tsr_char_poly(const TsrStar& t);

struct Classification {
  bool irreducible = false;
  bool primitive = false;
};
Classification classify(const TsrStar& t);

std::vector<FieldElem> step(const TsrStar& t, const std::vector<FieldElem>& state);
std::vector<std::vector<FieldElem>> sequence(const TsrStar& t,
                                             const std::vector<FieldElem>& seed,
                                             std::size_t length);

enum class TsrFilter { All, Irreducible, Primitive };

/// All (g, A) pairs in deterministic order (g outer in enumeration order, GL
/// inner), each with its characteristic polynomial. The candidate count
/// gl_order(m, q) * q^(n-1) must not exceed the ceiling.
void for_each_tsr(std::size_t m, std::size_t n, const FieldCtx& ctx, TsrFilter filter,
                  const std::function<void(const TsrStar&, const Poly&)>& fn,
                  std::uint64_t ceiling = kDefaultCeiling);
std::vector<std::pair<TsrStar, Poly>> enumerate_tsr(std::size_t m, std::size_t n,
                                                    const FieldCtx& ctx, TsrFilter filter,
                                                    std::uint64_t ceiling = kDefaultCeiling);

/// All (g, h) pairs with f == g^m h(X^n/g), ordered by g. Per candidate g the
/// non-leading coefficients of h are solved triangularly from the X^(n*j)
/// coefficients of f, then the pair is verified by re-expansion.
std::vector<Decomposition> decompose(const Poly& f, std::size_t m, std::size_t n);

enum class FiberMode { Bruteforce, Formula };

/// Number of TSRs with characteristic polynomial f. Formula mode requires f
/// uniquely decomposable and returns the matrix count of the h part.
std::int64_t fiber_count(const Poly& f, std::size_t m, std::size_t n, FiberMode mode,
                         std::uint64_t ceiling = kDefaultCeiling);

/// prod_{i=0}^{m-1} (X^n - lambda^(q^i) g), computed over GF(q^m) and
/// re-expressed over GF(q); irreducible of degree mn whenever X^n - lambda*g
/// is irreducible over GF(q^m).
Poly gamma(const FieldElem& lambda, const Poly& g, std::size_t n);

/// Pairs (lambda, g) with lambda of full degree m over GF(q), g(0) = 1,
/// deg g <= n-1, and X^n - lambda*g irreducible over GF(q^m).
std::vector<std::pair<FieldElem, Poly>> enumerate_s(std::size_t m, std::size_t n,
                                                    const FieldCtx& ctx,
                                                    std::uint64_t field_ceiling = 4096,
                                                    std::uint64_t g_ceiling = 10000);

/// Degree-t generators alpha of GF(q^t) for which X^2 + a X - alpha is
/// irreducible over GF(q^t).
std::vector<FieldElem> enumerate_v(std::size_t t, const FieldElem& a,
                                   std::uint64_t field_ceiling = 4096);

/// The partition sets behind the order-two count: z (degree-t elements),
/// x/y split by whether alpha^2 + a*alpha still has full degree, u (attained
/// full-degree values of that map), v (unattained = quadratic irreducible).
/// Verifies z = x disjoint-union y = u disjoint-union v.
struct ProofPartitions {
  std::vector<FieldElem> z, x, y, u, v;
};
ProofPartitions proof_partitions(std::size_t t, const FieldElem& a,
                                 std::uint64_t field_ceiling = 4096);

}  // namespace tsrforge
