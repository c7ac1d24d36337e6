#include "tsrforge/tsr.hpp"

#include <algorithm>
#include <set>

#include "tsrforge/counting.hpp"

namespace tsrforge {

namespace {
using u64 = std::uint64_t;

// g = 1 + c_1 X + ... + c_{n-1} X^{n-1} with the free coefficients taken from
// the enumeration index (c_1 counts fastest)
Poly g_at(const FieldCtx& ctx, std::size_t n, u64 idx) {
  std::vector<FieldElem> c;
  c.reserve(n);
  c.push_back(ctx.one());
  u64 q = ctx.cardinality();
  for (std::size_t i = 1; i < n; ++i) {
    c.push_back(ctx.element_at(idx % q));
    idx /= q;
  }
  return Poly(ctx, std::move(c));
}
}  // namespace

TsrStar::TsrStar(std::size_t m_, std::size_t n_, Poly g_, Matrix a_)
    : m(m_), n(n_), g(std::move(g_)), a(std::move(a_)) {
  if (m < 1 || n < 1 || std::max(m, n) < 2)
    fail(Err::DomainBound, "TSR parameters require max(m, n) > 1");
  if (!same_field(g.ctx(), a.ctx())) fail(Err::CtxMismatch, "g and A over different fields");
  if (a.rows() != m || a.cols() != m) fail(Err::DimMismatch, "A must be m x m");
  if (g.is_zero() || !g.coeff(0).is_one() || g.degree() > static_cast<int>(n) - 1)
    fail(Err::BadG, "g must satisfy g(0) = 1 and deg g <= n-1");
  if (!is_invertible(a)) fail(Err::NotInvertible, "A must be invertible");
}

TsrGeneral::TsrGeneral(std::size_t m_, std::size_t n_, std::vector<FieldElem> c_, Matrix b_)
    : m(m_), n(n_), c(std::move(c_)), b(std::move(b_)) {
  if (m < 1 || n < 1) fail(Err::DomainBound, "TSR parameters must be positive");
  if (c.size() != n) fail(Err::DimMismatch, "need exactly n feedback coefficients");
  if (b.rows() != m || b.cols() != m) fail(Err::DimMismatch, "B must be m x m");
  for (const auto& ci : c)
    if (!same_field(ci.ctx(), b.ctx())) fail(Err::CtxMismatch, "coefficient from another field");
}

namespace {
Matrix assemble_blocks(std::size_t m, std::size_t n, const FieldCtx& ctx,
                       const std::vector<FieldElem>& c, const Matrix& blk) {
  Matrix t(ctx, m * n, m * n);
  for (std::size_t br = 1; br < n; ++br)
    for (std::size_t i = 0; i < m; ++i) t.set(br * m + i, (br - 1) * m + i, ctx.one());
  for (std::size_t br = 0; br < n; ++br) {
    if (c[br].is_zero()) continue;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        t.set(br * m + i, (n - 1) * m + j, c[br] * blk.at(i, j));
  }
  return t;
}
}  // namespace

Matrix assemble(const TsrStar& t) {
  std::vector<FieldElem> c;
  c.reserve(t.n);
  c.push_back(t.ctx().one());
  for (std::size_t i = 1; i < t.n; ++i) c.push_back(t.g.coeff(i));
  return assemble_blocks(t.m, t.n, t.ctx(), c, t.a);
}

Matrix assemble(const TsrGeneral& t) {
  return assemble_blocks(t.m, t.n, t.ctx(), t.c, t.b);
}

Poly tsr_char_poly(const TsrStar& t) { return mn_compose(t.g, char_poly(t.a), t.m, t.n); }

Classification classify(const TsrStar& t) {
  Poly phi = tsr_char_poly(t);
  Classification c;
  c.irreducible = is_irreducible(phi);
  c.primitive = c.irreducible && is_primitive_poly(phi);
  return c;
}

std::vector<FieldElem> step(const TsrStar& t, const std::vector<FieldElem>& state) {
  if (state.size() != t.m * t.n) fail(Err::DimMismatch, "state length must be m*n");
  return mat_vec(assemble(t), state);
}

std::vector<std::vector<FieldElem>> sequence(const TsrStar& t,
                                             const std::vector<FieldElem>& seed,
                                             std::size_t length) {
  if (seed.size() != t.m * t.n) fail(Err::DimMismatch, "seed length must be m*n");
  Matrix big = assemble(t);
  std::vector<std::vector<FieldElem>> out;
  out.reserve(length);
  std::vector<FieldElem> cur = seed;
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back(cur);
    cur = mat_vec(big, cur);
  }
  return out;
}

void for_each_tsr(std::size_t m, std::size_t n, const FieldCtx& ctx, TsrFilter filter,
                  const std::function<void(const TsrStar&, const Poly&)>& fn,
                  u64 ceiling) {
  if (m < 1 || n < 1 || std::max(m, n) < 2)
    fail(Err::DomainBound, "TSR enumeration requires max(m, n) > 1");
  u64 q = ctx.cardinality();
  u64 pairs;
  try {
    pairs = checked_mul(gl_order(m, q), checked_pow(q, n - 1));
  } catch (const Error&) {
    fail(Err::CeilingExceeded, "TSR candidate space too large");
  }
  if (pairs > ceiling) fail(Err::CeilingExceeded, "TSR candidate space too large");
  u64 gcount = checked_pow(q, n - 1);
  for (u64 gi = 0; gi < gcount; ++gi) {
    Poly g = g_at(ctx, n, gi);
    for_each_gl(
        m, ctx,
        [&](const Matrix& a) {
          TsrStar t(m, n, g, a);
          Poly phi = tsr_char_poly(t);
          if (filter != TsrFilter::All) {
            if (!is_irreducible(phi)) return;
            if (filter == TsrFilter::Primitive && !is_primitive_poly(phi)) return;
          }
          fn(t, phi);
        },
        ceiling);
  }
}

std::vector<std::pair<TsrStar, Poly>> enumerate_tsr(std::size_t m, std::size_t n,
                                                    const FieldCtx& ctx, TsrFilter filter,
                                                    u64 ceiling) {
  std::vector<std::pair<TsrStar, Poly>> out;
  for_each_tsr(m, n, ctx, filter,
               [&](const TsrStar& t, const Poly& phi) { out.push_back({t, phi}); }, ceiling);
  return out;
}

std::vector<Decomposition> decompose(const Poly& f, std::size_t m, std::size_t n) {
  if (m < 1 || n < 1 || std::max(m, n) < 2)
    fail(Err::DomainBound, "decomposition requires max(m, n) > 1");
  if (!f.is_monic()) fail(Err::NotMonic, "decomposition requires a monic polynomial");
  if (f.degree() != static_cast<int>(m * n)) fail(Err::WrongDegree, "degree must equal m*n");
  if (f.coeff(0).is_zero()) fail(Err::VanishesAtZero, "decomposition requires f(0) != 0");
  const FieldCtx& ctx = f.ctx();
  u64 q = ctx.cardinality();
  u64 gcount;
  try {
    gcount = checked_pow(q, n - 1);
  } catch (const Error&) {
    fail(Err::CeilingExceeded, "too many g candidates");
  }
  if (gcount > kDefaultCeiling) fail(Err::CeilingExceeded, "too many g candidates");
  std::vector<Decomposition> out;
  for (u64 gi = 0; gi < gcount; ++gi) {
    Poly g = g_at(ctx, n, gi);
    std::vector<Poly> gp{Poly(ctx, {ctx.one()})};
    for (std::size_t i = 1; i <= m; ++i) gp.push_back(gp.back() * g);
    // h_j from the X^(n*j) coefficients, lowest first
    std::vector<FieldElem> h(m + 1, ctx.zero());
    h[m] = ctx.one();
    for (std::size_t j = 0; j < m; ++j) {
      FieldElem acc = f.coeff(n * j);
      for (std::size_t jp = 0; jp < j; ++jp)
        acc = acc - h[jp] * gp[m - jp].coeff(n * (j - jp));
      h[j] = acc;
    }
    Poly hp(ctx, h);
    if (hp.coeff(0).is_zero()) continue;
    if (mn_compose(g, hp, m, n) == f) out.push_back({g, hp});
  }
  return out;
}

std::int64_t fiber_count(const Poly& f, std::size_t m, std::size_t n, FiberMode mode,
                         u64 ceiling) {
  if (!f.is_monic()) fail(Err::NotMonic, "fiber requires a monic polynomial");
  if (f.degree() != static_cast<int>(m * n)) fail(Err::WrongDegree, "degree must equal m*n");
  if (f.coeff(0).is_zero()) fail(Err::VanishesAtZero, "fiber requires f(0) != 0");
  if (mode == FiberMode::Bruteforce) {
    std::int64_t count = 0;
    for_each_tsr(m, n, f.ctx(), TsrFilter::All,
                 [&](const TsrStar&, const Poly& phi) {
                   if (phi == f) ++count;
                 },
                 ceiling);
    return count;
  }
  auto ds = decompose(f, m, n);
  if (ds.size() != 1)
    fail(Err::NotUniquelyDecomposable,
         "fiber formula requires a uniquely decomposable polynomial (found " +
             std::to_string(ds.size()) + " decompositions)");
  return n_chi(ds.front().h);
}

Poly gamma(const FieldElem& lambda, const Poly& g, std::size_t n) {
  if (n < 1) fail(Err::DomainBound, "order must be >= 1");
  if (g.is_zero() || !g.coeff(0).is_one() || g.degree() > static_cast<int>(n) - 1)
    fail(Err::BadG, "g must satisfy g(0) = 1 and deg g <= n-1");
  const FieldCtx& base = g.ctx();
  u64 q = base.cardinality();
  if (same_field(lambda.ctx(), base)) {
    // trivial orbit: X^n - lambda*g
    Poly xn = Poly::x(base).pow(n);
    return xn - g * lambda;
  }
  if (lambda.ctx().is_prime() || !same_field(lambda.ctx().base(), base))
    fail(Err::CtxMismatch, "lambda must live in an extension of g's field");
  std::size_t m = lambda.ctx().ext_degree();
  if (degree_over(lambda, q) != m)
    fail(Err::WrongDegreeElement, "lambda must have full degree over the base field");
  const FieldCtx& K = lambda.ctx();
  Poly gk = lift(g, K);
  Poly xn = Poly::x(K).pow(n);
  Poly prod(K, {K.one()});
  FieldElem conj = lambda;
  for (std::size_t i = 0; i < m; ++i) {
    prod = prod * (xn - gk * conj);
    conj = conj.pow(static_cast<std::int64_t>(q));
  }
  std::vector<FieldElem> cs;
  cs.reserve(prod.coeffs().size());
  for (const auto& c : prod.coeffs()) cs.push_back(project(c, base));
  return Poly(base, std::move(cs));
}

std::vector<std::pair<FieldElem, Poly>> enumerate_s(std::size_t m, std::size_t n,
                                                    const FieldCtx& ctx,
                                                    u64 field_ceiling, u64 g_ceiling) {
  if (m < 1 || n < 1) fail(Err::DomainBound, "parameters must be positive");
  u64 q = ctx.cardinality();
  u64 qm;
  try {
    qm = checked_pow(q, m);
  } catch (const Error&) {
    fail(Err::CeilingExceeded, "extension field too large");
  }
  if (qm > field_ceiling) fail(Err::CeilingExceeded, "extension field too large");
  u64 gcount = checked_pow(q, n - 1);
  if (gcount > g_ceiling) fail(Err::CeilingExceeded, "too many g candidates");
  FieldCtx K = default_extension(ctx, m);
  std::vector<std::pair<FieldElem, Poly>> out;
  Poly xn = Poly::x(K).pow(n);
  for (u64 li = 0; li < qm; ++li) {
    FieldElem lambda = K.element_at(li);
    if (degree_over(lambda, q) != m) continue;
    for (u64 gi = 0; gi < gcount; ++gi) {
      Poly g = g_at(ctx, n, gi);
      Poly cand = xn - lift(g, K) * lambda;
      if (is_irreducible(cand)) out.push_back({lambda, g});
    }
  }
  return out;
}

std::vector<FieldElem> enumerate_v(std::size_t t, const FieldElem& a, u64 field_ceiling) {
  ProofPartitions parts = proof_partitions(t, a, field_ceiling);
  return parts.v;
}

ProofPartitions proof_partitions(std::size_t t, const FieldElem& a, u64 field_ceiling) {
  if (t < 2) fail(Err::DomainBound, "partition sets require t > 1");
  const FieldCtx& ctx = a.ctx();
  u64 q = ctx.cardinality();
  u64 qt;
  try {
    qt = checked_pow(q, t);
  } catch (const Error&) {
    fail(Err::CeilingExceeded, "extension field too large");
  }
  if (qt > field_ceiling) fail(Err::CeilingExceeded, "extension field too large");
  FieldCtx K = default_extension(ctx, t);
  FieldElem aK = embed(a, K);
  ProofPartitions out;
  std::set<u64> useen;
  std::set<u64> zseen, vseen;
  for (u64 i = 0; i < qt; ++i) {
    FieldElem alpha = K.element_at(i);
    FieldElem beta = alpha * alpha + aK * alpha;
    std::size_t d2 = degree_over(beta, q);
    if (d2 == t) {
      out.x.push_back(alpha);
      useen.insert(K.index_of(beta));
    }
    std::size_t d1 = degree_over(alpha, q);
    if (d1 == t) {
      out.z.push_back(alpha);
      zseen.insert(i);
      if (d2 < t) out.y.push_back(alpha);
      Poly quad(K, {-alpha, aK, K.one()});  // X^2 + a X - alpha
      if (is_irreducible(quad)) {
        out.v.push_back(alpha);
        vseen.insert(i);
      }
    }
  }
  for (u64 i : useen) out.u.push_back(K.element_at(i));
  // z = x (+) y and z = u (+) v must both hold
  if (out.z.size() != out.x.size() + out.y.size())
    fail(Err::InternalInconsistency, "degree partition failed");
  if (out.z.size() != out.u.size() + out.v.size())
    fail(Err::InternalInconsistency, "attained/unattained partition sizes disagree");
  for (u64 i : useen)
    if (vseen.count(i))
      fail(Err::InternalInconsistency, "attained and unattained sets intersect");
  for (u64 i : useen)
    if (!zseen.count(i))
      fail(Err::InternalInconsistency, "attained value of wrong degree");
  return out;
}

}  // namespace tsrforge
