#include "tsrforge/numbers.hpp"

#include <algorithm>
#include <numeric>

namespace tsrforge {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(u128(a) * b % n); }

u64 powmod(u64 a, u64 e, u64 n) {
  u64 r = 1;
  a %= n;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Deterministic Pollard rho (Floyd), fixed parameter schedule c = 1, 2, ...
u64 pollard_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factor_integer(u64 n) {
  if (n < 1) fail(Err::DomainBound, "factor_integer requires n >= 1");
  if (n > kMaxCount) fail(Err::Overflow, "factor_integer requires n < 2^63");
  std::vector<u64> primes;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.push_back({p, 1});
  }
  return out;
}

int mobius(u64 n) {
  auto fs = factor_integer(n);
  for (auto& [p, e] : fs)
    if (e >= 2) return 0;
  return (fs.size() % 2 == 0) ? 1 : -1;
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (auto& [p, e] : factor_integer(n)) r = r / p * (p - 1);
  return r;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> ds{1};
  for (auto& [p, e] : factor_integer(n)) {
    std::size_t sz = ds.size();
    u64 pw = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pw *= p;
      for (std::size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pw);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::optional<std::pair<u64, unsigned>> prime_power_decompose(u64 q) {
  if (q < 2) return std::nullopt;
  auto fs = factor_integer(q);
  if (fs.size() != 1) return std::nullopt;
  return fs[0];
}

}  // namespace tsrforge
