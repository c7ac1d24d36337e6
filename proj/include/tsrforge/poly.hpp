#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tsrforge/fields.hpp"
#include "tsrforge/numbers.hpp"

namespace tsrforge {

/// Dense univariate polynomial over a FieldCtx. Coefficients ascending, no
/// trailing zeros; the zero polynomial has an empty vector and degree() == -1.
class Poly {
 public:
  explicit Poly(const FieldCtx& ctx) : ctx_(ctx) {}
  Poly(const FieldCtx& ctx, std::vector<FieldElem> coeffs);
  static Poly from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> asc);
  static Poly from_ints(const FieldCtx& ctx, const std::vector<std::int64_t>& asc);
  static Poly constant(const FieldElem& c);
  static Poly x(const FieldCtx& ctx);

  const FieldCtx& ctx() const noexcept { return ctx_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const;
  const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
  FieldElem coeff(std::size_t i) const;  // zero beyond the degree
  FieldElem leading() const;             // throws ZeroPolynomial

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElem& s) const;
  Poly operator-() const;
  Poly pow(std::uint64_t e) const;
  FieldElem eval(const FieldElem& x) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Canonical text form, descending exponents: "x^4+x^3+1", "(t+1)*x^2+t".
  std::string str() const;

 private:
  FieldCtx ctx_;
  std::vector<FieldElem> coeffs_;
};

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic unless both zero
Poly derivative(const Poly& f);
Poly monic_scale(const Poly& f);

/// f(X + c).
Poly shift_compose(const Poly& f, const FieldElem& c);
/// X^deg(f) * f(1/X): the reversed coefficient vector, re-normalized.
Poly reciprocal(const Poly& f);
bool is_self_reciprocal(const Poly& f);

/// g(X)^m * h(X^n / g(X)) for monic h of degree m with h(0) != 0 and g with
/// g(0) = 1, deg g <= n-1. Monic of degree m*n.
Poly mn_compose(const Poly& g, const Poly& h, std::size_t m, std::size_t n);

bool is_irreducible(const Poly& f);
/// Monic irreducible factors with multiplicities, sorted by degree then by
/// coefficient enumeration order; the product reconstructs f.
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f);

std::vector<Poly> enumerate_monic(const FieldCtx& ctx, std::size_t d,
                                  std::uint64_t ceiling = kDefaultCeiling);
std::vector<Poly> enumerate_monic_irreducible(const FieldCtx& ctx, std::size_t d,
                                              std::uint64_t ceiling = kDefaultCeiling);

/// Multiplicative order of X modulo f; f monic with f(0) != 0.
std::uint64_t poly_order(const Poly& f);
bool is_primitive_poly(const Poly& f);

/// (1/r) * sum_{d | r} mu(d) q^(r/d): monic irreducibles of degree r over GF(q).
std::uint64_t count_irreducible(std::size_t r, std::uint64_t q);
/// phi(q^r - 1)/r: primitive polynomials of degree r over GF(q).
std::uint64_t count_primitive(std::size_t r, std::uint64_t q);

// --- field extension construction -----------------------------------------

/// Extension of base by a monic irreducible modulus; throws Err::Reducible
/// with a witness factor in the message otherwise.
FieldCtx extend(const FieldCtx& base, const Poly& modulus);
/// Extension by the first monic irreducible of degree k in enumeration order;
/// k == 1 returns base unchanged.
FieldCtx default_extension(const FieldCtx& base, std::size_t k);
Poly modulus_poly(const FieldCtx& ext);
/// prod_{i<d} (X - a^(q^i)) expressed over the tower level of cardinality q.
Poly minimal_poly_over(const FieldElem& a, std::uint64_t subfield_card);
/// Coefficient-wise embed into a higher tower level.
Poly lift(const Poly& f, const FieldCtx& ext);

}  // namespace tsrforge
