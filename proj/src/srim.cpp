#include "tsrforge/srim.hpp"

#include <set>
#include <string>

namespace tsrforge {

namespace {
using u64 = std::uint64_t;
}

std::vector<Poly> enumerate_srim(std::size_t two_m, const FieldCtx& ctx, u64 ceiling) {
  if (two_m < 2) fail(Err::DomainBound, "degree must be >= 2");
  if (two_m % 2 != 0) fail(Err::OddDegree, "self-reciprocal irreducibles have even degree");
  std::size_t m = two_m / 2;
  u64 q = ctx.cardinality();
  u64 total;
  try {
    total = checked_pow(q, m);
  } catch (const Error&) {
    fail(Err::CeilingExceeded, "too many palindromic candidates");
  }
  if (total > ceiling) fail(Err::CeilingExceeded, "too many palindromic candidates");
  std::vector<Poly> out;
  for (u64 idx = 0; idx < total; ++idx) {
    std::vector<FieldElem> c(two_m + 1, ctx.zero());
    c[0] = ctx.one();
    c[two_m] = ctx.one();
    u64 rest = idx;
    for (std::size_t i = 1; i <= m; ++i) {
      FieldElem ci = ctx.element_at(rest % q);
      rest /= q;
      c[i] = ci;
      c[two_m - i] = ci;
    }
    Poly f(ctx, std::move(c));
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

Poly q_transform_decompose(const Poly& f) {
  if (!f.is_monic()) fail(Err::NotMonic, "transform requires a monic polynomial");
  if (f.degree() < 2 || f.degree() % 2 != 0)
    fail(Err::OddDegree, "transform requires even degree >= 2");
  if (!is_self_reciprocal(f)) fail(Err::NotSelfReciprocal, "polynomial is not a palindrome");
  const FieldCtx& ctx = f.ctx();
  std::size_t m = static_cast<std::size_t>(f.degree()) / 2;
  // f = sum_j b_j X^(m-j) (X^2+1)^j; peel b_j from the X^(m+j) coefficient
  Poly quad = Poly::from_ints(ctx, {1, 0, 1});
  std::vector<Poly> qp{Poly(ctx, {ctx.one()})};
  for (std::size_t j = 1; j <= m; ++j) qp.push_back(qp.back() * quad);
  std::vector<FieldElem> b(m + 1, ctx.zero());
  Poly r = f;
  for (std::size_t j = m + 1; j-- > 0;) {
    FieldElem bj = r.coeff(m + j);
    b[j] = bj;
    if (!bj.is_zero()) {
      Poly term = qp[j] * bj;
      std::vector<FieldElem> shifted(m - j, ctx.zero());
      shifted.insert(shifted.end(), term.coeffs().begin(), term.coeffs().end());
      r = r - Poly(ctx, std::move(shifted));
    }
  }
  if (!r.is_zero())
    fail(Err::NoRepresentation, "no X^m h1(X + 1/X) representation exists");
  Poly h1(ctx, std::move(b));
  // re-expand as an independent check
  Poly check(ctx);
  for (std::size_t j = 0; j <= m; ++j) {
    if (h1.coeff(j).is_zero()) continue;
    Poly term = qp[j] * h1.coeff(j);
    std::vector<FieldElem> shifted(m - j, ctx.zero());
    shifted.insert(shifted.end(), term.coeffs().begin(), term.coeffs().end());
    check = check + Poly(ctx, std::move(shifted));
  }
  if (!(check == f)) fail(Err::InternalInconsistency, "transform re-expansion mismatch");
  return h1;
}

SrimRecord srim_to_tsr(const Poly& f) {
  if (!is_irreducible(f)) fail(Err::Reducible, "input polynomial is not irreducible");
  Poly h1 = q_transform_decompose(f);
  const FieldCtx& ctx = f.ctx();
  std::size_t m = static_cast<std::size_t>(f.degree()) / 2;
  Poly h = shift_compose(h1, ctx.from_integer(2));
  Poly g = Poly::from_ints(ctx, {1, 1});  // 1 + X
  TsrStar t(m, 2, g, companion(h));
  Poly phi = tsr_char_poly(t);
  Poly expected = shift_compose(f, ctx.one());
  if (!(phi == expected))
    fail(Err::InternalInconsistency, "constructed TSR has the wrong characteristic polynomial");
  return SrimRecord{f, std::move(h1), std::move(h), std::move(t)};
}

bool delta_srim_check(std::size_t m, const FieldCtx& ctx, u64 ceiling) {
  if (ctx.cardinality() != 2)
    fail(Err::DomainBound, "the shifted-palindrome identity is stated over GF(2)");
  if (m < 1) fail(Err::DomainBound, "m must be >= 1");
  std::set<std::string> attained;
  for_each_tsr(m, 2, ctx, TsrFilter::Irreducible,
               [&](const TsrStar&, const Poly& phi) { attained.insert(phi.str()); }, ceiling);
  std::set<std::string> shifted;
  for (const Poly& f : enumerate_srim(2 * m, ctx))
    shifted.insert(shift_compose(f, ctx.one()).str());
  return attained == shifted;
}

}  // namespace tsrforge
