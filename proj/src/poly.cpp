#include "tsrforge/poly.hpp"

#include <algorithm>
#include <numeric>

#include "field_impl.hpp"

namespace tsrforge {

namespace {
using u64 = std::uint64_t;

void require_same_ctx(const Poly& a, const Poly& b) {
  if (!same_field(a.ctx(), b.ctx()))
    fail(Err::CtxMismatch, "polynomials live over different fields");
}
}  // namespace

// ---------------------------------------------------------------------------
// Poly basics

Poly::Poly(const FieldCtx& ctx, std::vector<FieldElem> coeffs) : ctx_(ctx) {
  for (const auto& c : coeffs)
    if (!same_field(c.ctx(), ctx)) fail(Err::CtxMismatch, "coefficient from another field");
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  coeffs_ = std::move(coeffs);
}

Poly Poly::from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> asc) {
  return from_ints(ctx, std::vector<std::int64_t>(asc));
}

Poly Poly::from_ints(const FieldCtx& ctx, const std::vector<std::int64_t>& asc) {
  std::vector<FieldElem> cs;
  cs.reserve(asc.size());
  for (auto v : asc) cs.push_back(ctx.from_integer(v));
  return Poly(ctx, std::move(cs));
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.ctx(), {c}); }

Poly Poly::x(const FieldCtx& ctx) { return Poly(ctx, {ctx.zero(), ctx.one()}); }

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

FieldElem Poly::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return ctx_.zero();
}

FieldElem Poly::leading() const {
  if (coeffs_.empty()) fail(Err::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
  require_same_ctx(*this, o);
  std::vector<FieldElem> c(std::max(coeffs_.size(), o.coeffs_.size()), ctx_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] + o.coeffs_[i];
  return Poly(ctx_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  require_same_ctx(*this, o);
  std::vector<FieldElem> c(std::max(coeffs_.size(), o.coeffs_.size()), ctx_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] - o.coeffs_[i];
  return Poly(ctx_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  require_same_ctx(*this, o);
  if (is_zero() || o.is_zero()) return Poly(ctx_);
  std::vector<FieldElem> c(coeffs_.size() + o.coeffs_.size() - 1, ctx_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
  }
  return Poly(ctx_, std::move(c));
}

Poly Poly::operator*(const FieldElem& s) const {
  std::vector<FieldElem> c = coeffs_;
  for (auto& ci : c) ci = ci * s;
  return Poly(ctx_, std::move(c));
}

Poly Poly::operator-() const {
  std::vector<FieldElem> c = coeffs_;
  for (auto& ci : c) ci = -ci;
  return Poly(ctx_, std::move(c));
}

Poly Poly::pow(u64 e) const {
  Poly r = Poly(ctx_, {ctx_.one()});
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FieldElem Poly::eval(const FieldElem& x) const {
  if (!same_field(x.ctx(), ctx_)) fail(Err::CtxMismatch, "evaluation point from another field");
  FieldElem acc = ctx_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

bool Poly::operator==(const Poly& o) const {
  if (!same_field(ctx_, o.ctx_)) return false;
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!(coeffs_[i] == o.coeffs_[i])) return false;
  return true;
}

namespace {
bool elem_needs_parens(const std::string& s) {
  return s.find('+') != std::string::npos || s.find('-') != std::string::npos;
}
}  // namespace

std::string Poly::str() const {
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    std::string term;
    std::string cs = coeffs_[i].str();
    if (i == 0) {
      term = cs;
    } else {
      std::string xs = (i == 1) ? "x" : "x^" + std::to_string(i);
      if (coeffs_[i].is_one())
        term = xs;
      else if (elem_needs_parens(cs))
        term = "(" + cs + ")*" + xs;
      else
        term = cs + "*" + xs;
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// division, gcd, calculus

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  require_same_ctx(a, b);
  if (b.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
  const FieldCtx& ctx = a.ctx();
  std::vector<FieldElem> r = a.coeffs();
  int db = b.degree();
  FieldElem lead_inv = b.leading().inv();
  std::vector<FieldElem> q(
      a.degree() >= db ? static_cast<std::size_t>(a.degree() - db) + 1 : 0, ctx.zero());
  while (static_cast<int>(r.size()) - 1 >= db) {
    FieldElem t = r.back() * lead_inv;
    std::size_t k = r.size() - 1 - static_cast<std::size_t>(db);
    q[k] = t;
    for (int i = 0; i <= db; ++i)
      r[k + static_cast<std::size_t>(i)] =
          r[k + static_cast<std::size_t>(i)] - t * b.coeff(static_cast<std::size_t>(i));
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return {Poly(ctx, std::move(q)), Poly(ctx, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly monic_scale(const Poly& f) {
  if (f.is_zero()) fail(Err::ZeroPolynomial, "cannot normalize the zero polynomial");
  if (f.is_monic()) return f;
  return f * f.leading().inv();
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_ctx(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : monic_scale(x);
}

Poly derivative(const Poly& f) {
  std::vector<FieldElem> c;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    c.push_back(f.coeffs()[i] * f.ctx().from_integer(static_cast<std::int64_t>(i)));
  return Poly(f.ctx(), std::move(c));
}

Poly shift_compose(const Poly& f, const FieldElem& c) {
  if (!same_field(f.ctx(), c.ctx())) fail(Err::CtxMismatch, "shift constant from another field");
  const FieldCtx& ctx = f.ctx();
  Poly xc(ctx, {c, ctx.one()});  // X + c
  Poly acc(ctx);
  for (std::size_t i = f.coeffs().size(); i-- > 0;)
    acc = acc * xc + Poly::constant(f.coeffs()[i]);
  return acc;
}

Poly reciprocal(const Poly& f) {
  if (f.is_zero()) fail(Err::ZeroPolynomial, "reciprocal of the zero polynomial");
  std::vector<FieldElem> c(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly(f.ctx(), std::move(c));
}

bool is_self_reciprocal(const Poly& f) {
  if (!f.is_monic()) fail(Err::NotMonic, "self-reciprocal test requires a monic polynomial");
  return reciprocal(f) == f;
}

Poly mn_compose(const Poly& g, const Poly& h, std::size_t m, std::size_t n) {
  require_same_ctx(g, h);
  if (m < 1 || n < 1) fail(Err::DomainBound, "block size and order must be positive");
  if (!h.is_monic() || h.degree() != static_cast<int>(m) || h.coeff(0).is_zero())
    fail(Err::BadH, "h must be monic of degree m with h(0) != 0");
  if (g.is_zero() || !g.coeff(0).is_one() || g.degree() > static_cast<int>(n) - 1)
    fail(Err::BadG, "g must satisfy g(0) = 1 and deg g <= n-1");
  const FieldCtx& ctx = g.ctx();
  std::vector<Poly> gp;
  gp.reserve(m + 1);
  gp.push_back(Poly(ctx, {ctx.one()}));
  for (std::size_t i = 1; i <= m; ++i) gp.push_back(gp.back() * g);
  std::vector<FieldElem> acc(m * n + 1, ctx.zero());
  for (std::size_t j = 0; j <= m; ++j) {
    FieldElem hj = h.coeff(j);
    if (hj.is_zero()) continue;
    const Poly& gpow = gp[m - j];
    for (std::size_t i = 0; i < gpow.coeffs().size(); ++i)
      acc[n * j + i] = acc[n * j + i] + hj * gpow.coeffs()[i];
  }
  Poly out(ctx, std::move(acc));
  if (out.degree() != static_cast<int>(m * n) || !out.is_monic())
    fail(Err::InternalInconsistency, "composed polynomial has wrong shape");
  return out;
}

// ---------------------------------------------------------------------------
// modular arithmetic helpers

namespace {

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod) { return (a * b) % mod; }

Poly poly_powmod(Poly base, u64 e, const Poly& mod) {
  Poly r = Poly(mod.ctx(), {mod.ctx().one()}) % mod;
  base = base % mod;
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, mod);
    base = poly_mulmod(base, base, mod);
    e >>= 1;
  }
  return r;
}

// X^(q^i) mod f for i = 1..count (q = field cardinality)
std::vector<Poly> frobenius_powers(const Poly& f, std::size_t count) {
  u64 q = f.ctx().cardinality();
  std::vector<Poly> out;
  out.reserve(count);
  Poly cur = Poly::x(f.ctx()) % f;
  for (std::size_t i = 0; i < count; ++i) {
    cur = poly_powmod(cur, q, f);
    out.push_back(cur);
  }
  return out;
}

// monic polynomial of degree d whose coefficient vector has the given
// enumeration index (constant coordinate counts fastest)
Poly monic_at(const FieldCtx& ctx, std::size_t d, u64 idx) {
  std::vector<FieldElem> c;
  c.reserve(d + 1);
  u64 q = ctx.cardinality();
  for (std::size_t i = 0; i < d; ++i) {
    c.push_back(ctx.element_at(idx % q));
    idx /= q;
  }
  c.push_back(ctx.one());
  return Poly(ctx, std::move(c));
}

}  // namespace

// ---------------------------------------------------------------------------
// irreducibility and factorization

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) fail(Err::ConstantPolynomial, "irreducibility needs degree >= 1");
  Poly g = monic_scale(f);
  std::size_t d = static_cast<std::size_t>(g.degree());
  if (d == 1) return true;
  Poly xp = Poly::x(g.ctx()) % g;
  std::vector<Poly> frob = frobenius_powers(g, d);
  if (!(frob[d - 1] == xp)) return false;
  for (auto& [r, e] : factor_integer(d)) {
    (void)e;
    Poly h = gcd(frob[d / r - 1] - xp, g);
    if (h.degree() != 0) return false;
  }
  return true;
}

namespace {

// f with zero derivative is a p-th power; take the p-th root coefficient-wise.
Poly pth_root(const Poly& f) {
  const FieldCtx& ctx = f.ctx();
  u64 p = ctx.characteristic();
  u64 root_exp = ctx.cardinality() / p;  // a^(1/p) = a^(q/p)
  std::vector<FieldElem> c(f.coeffs().size() / p + 1, ctx.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    if (i % p != 0) fail(Err::InternalInconsistency, "not a p-th power");
    c[i / p] = f.coeffs()[i].pow(static_cast<std::int64_t>(root_exp));
  }
  return Poly(ctx, std::move(c));
}

void squarefree_into(const Poly& f, unsigned mult,
                     std::vector<std::pair<Poly, unsigned>>& out) {
  if (f.degree() < 1) return;
  u64 p = f.ctx().characteristic();
  Poly fp = derivative(f);
  if (fp.is_zero()) {
    squarefree_into(pth_root(f), mult * static_cast<unsigned>(p), out);
    return;
  }
  Poly c = gcd(f, fp);
  Poly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.push_back({z, mult * i});
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0) squarefree_into(pth_root(c), mult * static_cast<unsigned>(p), out);
}

// splits a squarefree product of distinct irreducibles of equal degree e
void equal_degree_split(const Poly& prod, std::size_t e, std::vector<Poly>& out) {
  Poly rest = prod;
  if (rest.degree() == static_cast<int>(e)) {
    out.push_back(rest);
    return;
  }
  u64 q = prod.ctx().cardinality();
  u64 total = checked_pow(q, e);
  for (u64 idx = 0; idx < total; ++idx) {
    Poly cand = monic_at(prod.ctx(), e, idx);
    auto [quo, rem] = divrem(rest, cand);
    if (!rem.is_zero()) continue;
    out.push_back(cand);
    rest = std::move(quo);
    if (rest.degree() == static_cast<int>(e)) {
      out.push_back(rest);
      return;
    }
    if (rest.degree() == 0) return;
  }
  fail(Err::InternalInconsistency, "equal-degree split did not terminate");
}

bool poly_index_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const FieldCtx& ctx = a.ctx();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    u64 ia = ctx.index_of(a.coeffs()[i]);
    u64 ib = ctx.index_of(b.coeffs()[i]);
    if (ia != ib) return ia < ib;
  }
  return false;
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f) {
  if (!f.is_monic()) fail(Err::NotMonic, "factorization requires a monic polynomial");
  if (f.degree() < 1) fail(Err::ConstantPolynomial, "factorization needs degree >= 1");
  std::vector<std::pair<Poly, unsigned>> sqfree;
  squarefree_into(f, 1, sqfree);

  std::vector<std::pair<Poly, unsigned>> out;
  u64 q = f.ctx().cardinality();
  for (auto& [part, mult] : sqfree) {
    // distinct-degree stage
    Poly rest = part;
    Poly xp = Poly::x(f.ctx());
    Poly h = xp % rest;
    std::size_t e = 1;
    std::vector<std::pair<Poly, std::size_t>> stages;
    while (2 * e <= static_cast<std::size_t>(rest.degree())) {
      h = poly_powmod(h, q, rest);
      Poly g = gcd(h - (xp % rest), rest);
      if (g.degree() > 0) {
        stages.push_back({g, e});
        rest = rest / g;
        if (rest.degree() == 0) break;
        h = h % rest;
      }
      ++e;
    }
    if (rest.degree() > 0) stages.push_back({rest, static_cast<std::size_t>(rest.degree())});
    for (auto& [prod, deg] : stages) {
      std::vector<Poly> irr;
      equal_degree_split(prod, deg, irr);
      for (auto& fi : irr) out.push_back({fi, mult});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return poly_index_less(a.first, b.first); });
  Poly check(f.ctx(), {f.ctx().one()});
  for (auto& [fi, mi] : out) check = check * fi.pow(mi);
  if (!(check == f)) fail(Err::InternalInconsistency, "factor product mismatch");
  return out;
}

// ---------------------------------------------------------------------------
// enumeration

std::vector<Poly> enumerate_monic(const FieldCtx& ctx, std::size_t d, u64 ceiling) {
  if (d < 1) fail(Err::DomainBound, "degree must be >= 1");
  u64 total;
  try {
    total = checked_pow(ctx.cardinality(), d);
  } catch (const Error&) {
    fail(Err::CeilingExceeded, "too many monic polynomials to enumerate");
  }
  if (total > ceiling) fail(Err::CeilingExceeded, "too many monic polynomials to enumerate");
  std::vector<Poly> out;
  out.reserve(total);
  for (u64 i = 0; i < total; ++i) out.push_back(monic_at(ctx, d, i));
  return out;
}

std::vector<Poly> enumerate_monic_irreducible(const FieldCtx& ctx, std::size_t d,
                                              u64 ceiling) {
  if (d < 1) fail(Err::DomainBound, "degree must be >= 1");
  u64 total;
  try {
    total = checked_pow(ctx.cardinality(), d);
  } catch (const Error&) {
    fail(Err::CeilingExceeded, "too many candidates to scan");
  }
  if (total > ceiling) fail(Err::CeilingExceeded, "too many candidates to scan");
  std::vector<Poly> out;
  for (u64 i = 0; i < total; ++i) {
    Poly cand = monic_at(ctx, d, i);
    if (is_irreducible(cand)) out.push_back(std::move(cand));
  }
  return out;
}

// ---------------------------------------------------------------------------
// orders and primitivity

std::uint64_t poly_order(const Poly& f) {
  if (!f.is_monic()) fail(Err::NotMonic, "order requires a monic polynomial");
  if (f.degree() < 1) fail(Err::ConstantPolynomial, "order needs degree >= 1");
  if (f.coeff(0).is_zero()) fail(Err::VanishesAtZero, "order requires f(0) != 0");
  u64 q = f.ctx().cardinality();
  std::size_t d = static_cast<std::size_t>(f.degree());
  if (is_irreducible(f)) {
    u64 big;
    try {
      big = checked_pow(q, d);
    } catch (const Error&) {
      fail(Err::FactorizationOverflow, "q^deg(f) - 1 does not fit in 63 bits");
    }
    u64 ord = big - 1;
    Poly xp = Poly::x(f.ctx());
    Poly one(f.ctx(), {f.ctx().one()});
    for (auto& [pr, e] : factor_integer(ord)) {
      (void)e;
      while (ord % pr == 0 && poly_powmod(xp, ord / pr, f) == one) ord /= pr;
    }
    return ord;
  }
  auto parts = factor(f);
  u64 l = 1;
  unsigned maxmult = 1;
  for (auto& [fi, mi] : parts) {
    u64 oi = poly_order(fi);
    l = checked_mul(l / std::gcd(l, oi), oi);
    maxmult = std::max(maxmult, mi);
  }
  u64 p = f.ctx().characteristic();
  u64 t = 1;
  while (t < maxmult) t = checked_mul(t, p);
  return checked_mul(l, t);
}

bool is_primitive_poly(const Poly& f) {
  if (!f.is_monic()) fail(Err::NotMonic, "primitivity requires a monic polynomial");
  if (f.degree() < 1) fail(Err::ConstantPolynomial, "primitivity needs degree >= 1");
  if (f.coeff(0).is_zero()) fail(Err::VanishesAtZero, "primitivity requires f(0) != 0");
  if (!is_irreducible(f)) return false;
  u64 big;
  try {
    big = checked_pow(f.ctx().cardinality(), static_cast<std::size_t>(f.degree()));
  } catch (const Error&) {
    fail(Err::FactorizationOverflow, "q^deg(f) - 1 does not fit in 63 bits");
  }
  return poly_order(f) == big - 1;
}

std::uint64_t count_irreducible(std::size_t r, u64 q) {
  if (r < 1) fail(Err::DomainBound, "degree must be >= 1");
  if (!prime_power_decompose(q)) fail(Err::DomainBound, "q must be a prime power");
  __int128 sum = 0;
  for (u64 d : divisors(r)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    u64 pw = checked_pow(q, r / d);
    sum += static_cast<__int128>(mu) * static_cast<__int128>(pw);
  }
  if (sum < 0 || sum % static_cast<__int128>(r) != 0)
    fail(Err::NonIntegerResult, "irreducible count is not integral");
  __int128 res = sum / static_cast<__int128>(r);
  if (res > static_cast<__int128>(kMaxCount)) fail(Err::Overflow, "count exceeds 2^63-1");
  return static_cast<u64>(res);
}

std::uint64_t count_primitive(std::size_t r, u64 q) {
  if (r < 1) fail(Err::DomainBound, "degree must be >= 1");
  if (!prime_power_decompose(q)) fail(Err::DomainBound, "q must be a prime power");
  u64 big;
  try {
    big = checked_pow(q, r);
  } catch (const Error&) {
    fail(Err::Overflow, "q^r does not fit in 63 bits");
  }
  u64 phi = euler_phi(big - 1);
  if (phi % r != 0) fail(Err::NonIntegerResult, "primitive count is not integral");
  return phi / r;
}

// ---------------------------------------------------------------------------
// extensions

FieldCtx extend(const FieldCtx& base, const Poly& modulus) {
  if (!same_field(modulus.ctx(), base))
    fail(Err::CtxMismatch, "modulus must be a polynomial over the base field");
  if (modulus.degree() < 1) fail(Err::WrongDegree, "modulus must have degree >= 1");
  if (!modulus.is_monic()) fail(Err::NotMonic, "modulus must be monic");
  if (!is_irreducible(modulus)) {
    Poly witness = factor(modulus).front().first;
    fail(Err::Reducible, "modulus is reducible; witness factor " + witness.str());
  }
  std::size_t k = static_cast<std::size_t>(modulus.degree());
  u64 card;
  try {
    card = checked_pow(base.cardinality(), k);
  } catch (const Error&) {
    fail(Err::TooLarge, "extension cardinality exceeds 2^63-1");
  }
  auto impl = std::make_shared<FieldCtx::Impl>();
  impl->base = base.impl_;
  impl->p = base.characteristic();
  impl->card = card;
  impl->exponent = base.prime_exponent() * k;
  impl->height = base.tower_height() + 1;
  impl->mod = modulus.coeffs();
  return FieldCtx(std::move(impl));
}

FieldCtx default_extension(const FieldCtx& base, std::size_t k) {
  if (k < 1) fail(Err::DomainBound, "extension degree must be >= 1");
  if (k == 1) return base;
  u64 total = checked_pow(base.cardinality(), k);
  for (u64 i = 0; i < total; ++i) {
    Poly cand = monic_at(base, k, i);
    if (is_irreducible(cand)) return extend(base, cand);
  }
  fail(Err::InternalInconsistency, "no irreducible polynomial found");
}

Poly modulus_poly(const FieldCtx& ext) {
  return Poly(ext.base(), ext.modulus_coeffs());
}

Poly lift(const Poly& f, const FieldCtx& ext) {
  std::vector<FieldElem> c;
  c.reserve(f.coeffs().size());
  for (const auto& ci : f.coeffs()) c.push_back(embed(ci, ext));
  return Poly(ext, std::move(c));
}

Poly minimal_poly_over(const FieldElem& a, u64 subfield_card) {
  // locate the tower level with the requested cardinality
  const FieldCtx* level = &a.ctx();
  std::vector<FieldCtx> chain{*level};
  while (!chain.back().is_prime()) chain.push_back(chain.back().base());
  const FieldCtx* sub = nullptr;
  for (const auto& c : chain)
    if (c.cardinality() == subfield_card) sub = &c;
  if (!sub) fail(Err::NotASubfield, "requested subfield is not a tower level");
  std::size_t d = degree_over(a, subfield_card);
  const FieldCtx& K = a.ctx();
  Poly prod(K, {K.one()});
  FieldElem conj = a;
  for (std::size_t i = 0; i < d; ++i) {
    prod = prod * Poly(K, {-conj, K.one()});
    conj = conj.pow(static_cast<std::int64_t>(subfield_card));
  }
  std::vector<FieldElem> c;
  c.reserve(prod.coeffs().size());
  for (const auto& ci : prod.coeffs()) c.push_back(project(ci, *sub));
  return Poly(*sub, std::move(c));
}

}  // namespace tsrforge
