#include "tsrforge/fields.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "field_impl.hpp"
#include "tsrforge/numbers.hpp"

namespace tsrforge {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<FieldElem>;

u64 inv_mod(u64 a, u64 p) {
  // extended Euclid; a != 0 mod p
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) fail(Err::DivisionByZero, "element not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

// -- variable-length polynomial helpers over the base field, used only for
// extension arithmetic (reduction and inverses) --

void vtrim(Vec& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

Vec vmul(const Vec& a, const Vec& b, const FieldCtx& base) {
  if (a.empty() || b.empty()) return {};
  Vec c(a.size() + b.size() - 1, base.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
  }
  vtrim(c);
  return c;
}

Vec vsub(const Vec& a, const Vec& b, const FieldCtx& base) {
  Vec c(std::max(a.size(), b.size()), base.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = c[i] - b[i];
  vtrim(c);
  return c;
}

// a = q*b + r with deg r < deg b; returns {q, r}
std::pair<Vec, Vec> vdivrem(Vec a, const Vec& b, const FieldCtx& base) {
  FieldElem lead_inv = b.back().inv();
  Vec q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, base.zero());
  while (a.size() >= b.size()) {
    FieldElem t = a.back() * lead_inv;
    std::size_t k = a.size() - b.size();
    q[k] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] = a[k + i] - t * b[i];
    vtrim(a);
  }
  return {std::move(q), std::move(a)};
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx FieldCtx::prime_field(u64 p) {
  if (p >= (u64(1) << 31)) fail(Err::TooLarge, "prime must be < 2^31");
  if (p < 2) fail(Err::NotPrime, std::to_string(p) + " is not prime");
  for (u64 d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(Err::NotPrime, std::to_string(p) + " is not prime");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->card = p;
  impl->exponent = 1;
  impl->height = 0;
  return FieldCtx(std::move(impl));
}

bool FieldCtx::is_prime() const noexcept { return impl_->base == nullptr; }
u64 FieldCtx::characteristic() const noexcept { return impl_->p; }
u64 FieldCtx::cardinality() const noexcept { return impl_->card; }
std::size_t FieldCtx::prime_exponent() const noexcept { return impl_->exponent; }
std::size_t FieldCtx::tower_height() const noexcept { return impl_->height; }

std::size_t FieldCtx::ext_degree() const {
  if (is_prime()) fail(Err::DomainBound, "prime field has no extension degree");
  return impl_->mod.size() - 1;
}

const FieldCtx& FieldCtx::base() const {
  if (is_prime()) fail(Err::DomainBound, "prime field has no base");
  // impl_->mod coefficients carry the base context
  return impl_->mod.front().ctx();
}

const std::vector<FieldElem>& FieldCtx::modulus_coeffs() const {
  if (is_prime()) fail(Err::DomainBound, "prime field has no modulus");
  return impl_->mod;
}

bool FieldCtx::operator==(const FieldCtx& o) const noexcept {
  if (impl_ == o.impl_) return true;
  if (impl_->height != o.impl_->height || impl_->card != o.impl_->card ||
      impl_->p != o.impl_->p)
    return false;
  if (is_prime()) return true;
  if (impl_->mod.size() != o.impl_->mod.size()) return false;
  if (!(base() == o.base())) return false;
  for (std::size_t i = 0; i < impl_->mod.size(); ++i)
    if (impl_->mod[i] != o.impl_->mod[i]) return false;
  return true;
}

bool same_field(const FieldCtx& a, const FieldCtx& b) { return a == b; }

FieldElem FieldCtx::zero() const {
  if (is_prime()) return FieldElem(*this, 0);
  Vec coords(ext_degree(), base().zero());
  return FieldElem(*this, std::move(coords));
}

FieldElem FieldCtx::one() const { return from_integer(1); }

FieldElem FieldCtx::from_integer(std::int64_t v) const {
  if (is_prime()) {
    std::int64_t p = static_cast<std::int64_t>(impl_->p);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return FieldElem(*this, static_cast<u64>(r));
  }
  FieldElem e = zero();
  e.coords_[0] = base().from_integer(v);
  return e;
}

FieldElem FieldCtx::generator() const {
  if (is_prime()) fail(Err::DomainBound, "prime field has no generator");
  std::size_t k = ext_degree();
  FieldElem e = zero();
  if (k == 1) {
    e.coords_[0] = -impl_->mod[0];  // root of a linear modulus
  } else {
    e.coords_[1] = base().one();
  }
  return e;
}

FieldElem FieldCtx::element_at(u64 index) const {
  if (index >= impl_->card) fail(Err::DomainBound, "element index out of range");
  if (is_prime()) return FieldElem(*this, index);
  u64 b = base().cardinality();
  FieldElem e = zero();
  for (std::size_t i = 0; i < ext_degree(); ++i) {
    e.coords_[i] = base().element_at(index % b);
    index /= b;
  }
  return e;
}

u64 FieldCtx::index_of(const FieldElem& a) const {
  if (!same_field(a.ctx(), *this)) fail(Err::CtxMismatch, "element from another field");
  if (is_prime()) return a.v_;
  u64 b = base().cardinality();
  u64 idx = 0;
  for (std::size_t i = a.coords_.size(); i-- > 0;)
    idx = idx * b + base().index_of(a.coords_[i]);
  return idx;
}

// ---------------------------------------------------------------------------
// FieldElem

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
  if (!same_field(a.ctx(), b.ctx()))
    fail(Err::CtxMismatch, "operands live in different fields");
}
}  // namespace

bool FieldElem::is_zero() const noexcept {
  if (ctx_.is_prime()) return v_ == 0;
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const FieldElem& c) { return c.is_zero(); });
}

bool FieldElem::is_one() const { return *this == ctx_.one(); }

u64 FieldElem::prime_value() const {
  if (!ctx_.is_prime()) fail(Err::DomainBound, "not a prime field element");
  return v_;
}

const std::vector<FieldElem>& FieldElem::coords() const { return coords_; }

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same(*this, o);
  if (ctx_.is_prime()) return FieldElem(ctx_, (v_ + o.v_) % ctx_.characteristic());
  FieldElem r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i] + o.coords_[i];
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  require_same(*this, o);
  if (ctx_.is_prime()) {
    u64 p = ctx_.characteristic();
    return FieldElem(ctx_, (v_ + p - o.v_) % p);
  }
  FieldElem r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i] - o.coords_[i];
  return r;
}

FieldElem FieldElem::operator-() const {
  if (ctx_.is_prime()) {
    u64 p = ctx_.characteristic();
    return FieldElem(ctx_, v_ == 0 ? 0 : p - v_);
  }
  FieldElem r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same(*this, o);
  if (ctx_.is_prime()) return FieldElem(ctx_, (v_ * o.v_) % ctx_.characteristic());
  const FieldCtx& b = ctx_.base();
  std::size_t k = coords_.size();
  Vec c(2 * k - 1, b.zero());
  for (std::size_t i = 0; i < k; ++i) {
    if (coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < k; ++j) c[i + j] = c[i + j] + coords_[i] * o.coords_[j];
  }
  const Vec& mod = ctx_.modulus_coeffs();
  for (std::size_t d = 2 * k - 2; d + 1 > k; --d) {
    if (c[d].is_zero()) continue;
    FieldElem t = c[d];
    c[d] = b.zero();
    for (std::size_t j = 0; j < k; ++j) c[d - k + j] = c[d - k + j] - t * mod[j];
  }
  c.resize(k, b.zero());
  return FieldElem(ctx_, std::move(c));
}

FieldElem FieldElem::inv() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
  if (ctx_.is_prime()) return FieldElem(ctx_, inv_mod(v_, ctx_.characteristic()));
  const FieldCtx& b = ctx_.base();
  std::size_t k = coords_.size();
  Vec r0 = ctx_.modulus_coeffs();
  Vec r1 = coords_;
  vtrim(r1);
  Vec s0, s1{b.one()};
  while (!r1.empty()) {
    auto [q, r] = vdivrem(r0, r1, b);
    r0 = std::move(r1);
    r1 = std::move(r);
    Vec snew = vsub(s0, vmul(q, s1, b), b);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  if (r0.size() != 1)
    fail(Err::InternalInconsistency, "modulus not coprime to nonzero element");
  FieldElem scale = r0[0].inv();
  Vec out(k, b.zero());
  for (std::size_t i = 0; i < s0.size(); ++i) out[i] = s0[i] * scale;
  return FieldElem(ctx_, std::move(out));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::pow(std::int64_t e) const {
  if (e < 0) {
    if (e == std::numeric_limits<std::int64_t>::min())
      fail(Err::TooLarge, "exponent out of range");
    return inv().pow(-e);
  }
  FieldElem r = ctx_.one();
  FieldElem b = *this;
  u64 ue = static_cast<u64>(e);
  while (ue > 0) {
    if (ue & 1) r = r * b;
    b = b * b;
    ue >>= 1;
  }
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (!same_field(ctx_, o.ctx_)) return false;
  if (ctx_.is_prime()) return v_ == o.v_;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!(coords_[i] == o.coords_[i])) return false;
  return true;
}

namespace {
char level_symbol(std::size_t height) {
  static const char syms[] = {'t', 'u', 'v', 'w'};
  if (height < 1 || height > 4) fail(Err::TooLarge, "tower too deep to print");
  return syms[height - 1];
}

bool needs_parens(const std::string& s) {
  return s.find('+') != std::string::npos || s.find('-') != std::string::npos;
}
}  // namespace

std::string FieldElem::str() const {
  if (ctx_.is_prime()) return std::to_string(v_);
  char sym = level_symbol(ctx_.tower_height());
  std::string out;
  for (std::size_t i = coords_.size(); i-- > 0;) {
    if (coords_[i].is_zero()) continue;
    std::string cs = coords_[i].str();
    std::string term;
    if (i == 0) {
      term = cs;
    } else {
      std::string xs(1, sym);
      if (i > 1) xs += "^" + std::to_string(i);
      if (coords_[i].is_one())
        term = xs;
      else if (needs_parens(cs))
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
// free operations

std::vector<FieldElem> enumerate_elements(const FieldCtx& ctx, u64 ceiling) {
  if (ctx.cardinality() > ceiling)
    fail(Err::CeilingExceeded, "field too large to enumerate");
  std::vector<FieldElem> out;
  out.reserve(ctx.cardinality());
  for (u64 i = 0; i < ctx.cardinality(); ++i) out.push_back(ctx.element_at(i));
  return out;
}

std::size_t degree_over(const FieldElem& a, u64 subfield_card) {
  u64 p = a.ctx().characteristic();
  std::size_t e = a.ctx().prime_exponent();
  if (subfield_card < 2) fail(Err::NotASubfield, "subfield cardinality must be >= 2");
  u64 pw = p;
  std::size_t j = 1;
  while (pw < subfield_card) {
    pw = checked_mul(pw, p);
    ++j;
  }
  if (pw != subfield_card || e % j != 0)
    fail(Err::NotASubfield,
         std::to_string(subfield_card) + " is not a subfield cardinality here");
  std::size_t bound = e / j;
  FieldElem cur = a.pow(static_cast<std::int64_t>(subfield_card));
  std::size_t d = 1;
  while (!(cur == a)) {
    cur = cur.pow(static_cast<std::int64_t>(subfield_card));
    ++d;
    if (d > bound) fail(Err::InternalInconsistency, "Frobenius orbit did not close");
  }
  return d;
}

u64 multiplicative_order(const FieldElem& a) {
  if (a.is_zero()) fail(Err::ZeroElement, "zero has no multiplicative order");
  u64 n = a.ctx().cardinality() - 1;
  if (n == 0) return 1;
  u64 ord = n;
  for (auto& [pr, ex] : factor_integer(n)) {
    (void)ex;
    while (ord % pr == 0 && a.pow(static_cast<std::int64_t>(ord / pr)).is_one()) ord /= pr;
  }
  return ord;
}

bool is_primitive_element(const FieldElem& a) {
  if (a.is_zero()) return false;
  return multiplicative_order(a) == a.ctx().cardinality() - 1;
}

FieldElem embed(const FieldElem& a, const FieldCtx& ext) {
  if (same_field(a.ctx(), ext)) return a;
  if (ext.is_prime()) fail(Err::NotASubfield, "element field is not a tower level");
  FieldElem inner = embed(a, ext.base());
  FieldElem out = ext.zero();
  out.coords_[0] = inner;
  return out;
}

FieldElem project(const FieldElem& a, const FieldCtx& sub) {
  if (same_field(a.ctx(), sub)) return a;
  if (a.ctx().is_prime())
    fail(Err::CoefficientNotInBase, "element does not lie in the requested subfield");
  const auto& cs = a.coords();
  for (std::size_t i = 1; i < cs.size(); ++i)
    if (!cs[i].is_zero())
      fail(Err::CoefficientNotInBase, "element does not lie in the requested subfield");
  return project(cs[0], sub);
}

bool lies_in(const FieldElem& a, const FieldCtx& sub) {
  try {
    (void)project(a, sub);
    return true;
  } catch (const Error& e) {
    if (e.code() == Err::CoefficientNotInBase) return false;
    throw;
  }
}

}  // namespace tsrforge
