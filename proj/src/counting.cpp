#include "tsrforge/counting.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "tsrforge/matrix.hpp"
#include "tsrforge/numbers.hpp"
#include "tsrforge/tsr.hpp"

namespace tsrforge {

namespace {

using u64 = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(u64 base, u64 exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

std::int64_t to_count(const BigInt& v, const char* what) {
  if (v < 0 || v > BigInt(kMaxCount)) fail(Err::Overflow, std::string(what) + " exceeds 2^63-1");
  return static_cast<std::int64_t>(v);
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0 || num % den != 0)
    fail(Err::NonIntegerResult, std::string(what) + " is not integral");
  return num / den;
}

// m = 2^k * l with l odd
void two_adic_split(std::size_t m, std::size_t& k, std::size_t& l) {
  k = 0;
  l = m;
  while (l % 2 == 0) {
    l /= 2;
    ++k;
  }
}

// sum_{d | l} mu(d) q^(m/d) for the odd part l of m
BigInt mobius_sum_odd_part(std::size_t m, u64 q) {
  std::size_t k, l;
  two_adic_split(m, k, l);
  BigInt s = 0;
  for (u64 d : divisors(l)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    s += BigInt(mu) * big_pow(q, m / d);
  }
  return s;
}

// floor(1/l) * (1 + (-1)^(q-1))/2: 1 only when m is a power of two and q odd
BigInt parity_correction(std::size_t m, u64 q) {
  std::size_t k, l;
  two_adic_split(m, k, l);
  return (l == 1 && q % 2 == 1) ? 1 : 0;
}

void require_prime_power(u64 q) {
  if (!prime_power_decompose(q)) fail(Err::DomainBound, "q must be a prime power");
}

}  // namespace

std::int64_t n_chi(const Poly& f) {
  if (!f.is_monic()) fail(Err::NotMonic, "matrix count requires a monic polynomial");
  if (f.degree() < 1) fail(Err::WrongDegree, "matrix count needs degree >= 1");
  std::size_t n = static_cast<std::size_t>(f.degree());
  u64 q = f.ctx().cardinality();
  auto parts = factor(f);
  // q^(n^2-n) F(q,n) / prod F(q^(d_i), m_i) with all F-ratios cleared:
  //   F(q,r) = prod_{i<=r} (q^i - 1) / q^(r(r+1)/2)
  BigInt num = big_pow(q, n * n - n);
  for (std::size_t i = 1; i <= n; ++i) num *= big_pow(q, i) - 1;
  BigInt den = big_pow(q, n * (n + 1) / 2);
  for (auto& [fi, mi] : parts) {
    std::size_t d = static_cast<std::size_t>(fi.degree());
    num *= big_pow(q, d * (std::size_t(mi) * (mi + 1) / 2));
    for (unsigned i = 1; i <= mi; ++i) den *= big_pow(q, d * i) - 1;
  }
  return to_count(exact_div(num, den, "matrix count"), "matrix count");
}

std::int64_t edge_counts(std::size_t m, std::size_t n, u64 q, TsrClass which) {
  require_prime_power(q);
  if ((m == 1) == (n == 1))
    fail(Err::DomainBound, "edge formulas require exactly one of m, n to be 1");
  auto poly_count = [&](std::size_t r) -> u64 {
    return which == TsrClass::Irreducible ? count_irreducible(r, q) : count_primitive(r, q);
  };
  if (m == 1) return static_cast<std::int64_t>(poly_count(n));
  u64 fiber = gl_order(m, q) / (checked_pow(q, m) - 1);
  return static_cast<std::int64_t>(checked_mul(fiber, poly_count(m)));
}

std::int64_t tsri_via_s(std::size_t m, std::size_t n, const FieldCtx& ctx,
                        u64 field_ceiling, u64 g_ceiling) {
  if (std::max(m, n) < 2) fail(Err::DomainBound, "requires max(m, n) > 1");
  u64 q = ctx.cardinality();
  auto s = enumerate_s(m, n, ctx, field_ceiling, g_ceiling);
  if (s.size() % m != 0)
    fail(Err::InternalInconsistency, "pair count not divisible by the conjugacy orbit size");
  u64 fiber = gl_order(m, q) / (checked_pow(q, m) - 1);
  return static_cast<std::int64_t>(checked_mul(s.size() / m, fiber));
}

std::int64_t n_q_m2(std::size_t m, u64 q) {
  if (m < 2) fail(Err::DomainBound, "closed form stated for m > 1");
  require_prime_power(q);
  BigInt v = exact_div(mobius_sum_odd_part(m, q) - parity_correction(m, q), 2,
                       "generator half-count");
  BigInt factor = (q % 2 == 0) ? BigInt(q - 1) : BigInt(q);
  return to_count(factor * v, "pair count");
}

std::int64_t v_count(std::size_t m, u64 q) {
  if (m < 2) fail(Err::DomainBound, "closed form stated for m > 1");
  require_prime_power(q);
  BigInt v = exact_div(mobius_sum_odd_part(m, q) - parity_correction(m, q), 2,
                       "generator half-count");
  return to_count(v, "per-coefficient count");
}

std::int64_t tsri_m2(std::size_t m, u64 q) {
  if (m < 2) fail(Err::DomainBound, "closed form stated for m > 1");
  require_prime_power(q);
  BigInt factor = (q % 2 == 0) ? BigInt(q - 1) : BigInt(q);
  BigInt num = factor * (mobius_sum_odd_part(m, q) - parity_correction(m, q)) *
               BigInt(gl_order(m, q));
  BigInt den = BigInt(2) * BigInt(m) * (big_pow(q, m) - 1);
  return to_count(exact_div(num, den, "order-two count"), "order-two count");
}

std::int64_t carlitz_srim(std::size_t m, u64 q) {
  if (m < 1) fail(Err::DomainBound, "degree parameter must be >= 1");
  require_prime_power(q);
  BigInt num = mobius_sum_odd_part(m, q) - parity_correction(m, q);
  return to_count(exact_div(num, BigInt(2) * BigInt(m), "palindromic count"),
                  "palindromic count");
}

Bounds bounds(std::size_t m, std::size_t n, u64 q) {
  if (m < 1 || n < 1) fail(Err::DomainBound, "parameters must be positive");
  require_prime_power(q);
  u64 fiber = gl_order(m, q) / (checked_pow(q, m) - 1);
  u64 tail = checked_pow(q, n - 1);
  Bounds b;
  b.tsri_upper = static_cast<std::int64_t>(
      checked_mul(checked_mul(fiber, count_irreducible(m, q)), tail));
  b.tsrp_upper = static_cast<std::int64_t>(
      checked_mul(checked_mul(fiber, count_primitive(m, q)), tail));
  return b;
}

std::int64_t sigma_lfsr_counts(std::size_t m, std::size_t n, u64 q, SigmaKind kind) {
  if (m < 1 || n < 1) fail(Err::DomainBound, "parameters must be positive");
  require_prime_power(q);
  std::size_t mn = m * n;
  BigInt tail = big_pow(q, m * (m - 1) * (n - 1));
  BigInt qm = big_pow(q, m);
  BigInt qi = q;
  for (std::size_t i = 1; i < m; ++i) {
    tail *= qm - qi;
    qi *= q;
  }
  if (kind == SigmaKind::Primitive) {
    u64 big;
    try {
      big = checked_pow(q, mn);
    } catch (const Error&) {
      fail(Err::FactorizationOverflow, "q^(mn) - 1 does not fit in 63 bits");
    }
    BigInt head = exact_div(BigInt(euler_phi(big - 1)), BigInt(mn), "primitive count");
    return to_count(head * tail, "primitive count");
  }
  // irreducible variant as displayed: no 1/(mn) normalization
  BigInt head = 0;
  for (u64 d : divisors(mn)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    head += BigInt(mu) * big_pow(q, mn / d);
  }
  return to_count(head * tail, "irreducible count");
}

}  // namespace tsrforge
