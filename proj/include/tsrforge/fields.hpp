#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tsrforge/common.hpp"

namespace tsrforge {

class FieldElem;
class Poly;

/// A finite field GF(p^k), either a prime field or an explicit tower of
/// extensions with stored moduli. Immutable and cheap to copy; two contexts
/// compare equal iff their towers and moduli are identical coefficient-wise.
class FieldCtx {
 public:
  static FieldCtx prime_field(std::uint64_t p);

  bool is_prime() const noexcept;
  std::uint64_t characteristic() const noexcept;
  std::uint64_t cardinality() const noexcept;
  /// Total exponent e with cardinality == characteristic^e.
  std::size_t prime_exponent() const noexcept;
  /// 0 for a prime field, 1 + base height otherwise.
  std::size_t tower_height() const noexcept;
  /// Extension degree over the base field (extensions only).
  std::size_t ext_degree() const;
  const FieldCtx& base() const;
  /// Monic modulus over the base, ascending, ext_degree()+1 entries.
  const std::vector<FieldElem>& modulus_coeffs() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_integer(std::int64_t v) const;
  /// The adjoined root of the modulus (extensions only).
  FieldElem generator() const;
  /// Element with the given enumeration index; the first coordinate is the
  /// least significant digit, so elements count 0, 1, ..., t, t+1, ...
  FieldElem element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElem& a) const;

  bool operator==(const FieldCtx& o) const noexcept;
  bool operator!=(const FieldCtx& o) const noexcept { return !(*this == o); }

  struct Impl;

 private:
  explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend class FieldElem;
  friend FieldCtx extend(const FieldCtx& base, const Poly& modulus);
};

inline FieldCtx make_prime_field(std::uint64_t p) { return FieldCtx::prime_field(p); }

/// Element of a FieldCtx in canonical form: a value mod p for prime fields, a
/// reduced coordinate vector over the base for extensions.
class FieldElem {
 public:
  const FieldCtx& ctx() const noexcept { return ctx_; }
  bool is_zero() const noexcept;
  bool is_one() const;
  std::uint64_t prime_value() const;
  const std::vector<FieldElem>& coords() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inv() const;
  FieldElem pow(std::int64_t e) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// Text form: decimal for prime fields, polynomial in the tower generators
  /// t, u, v, w otherwise (e.g. "t+1", "(t+1)*u+2").
  std::string str() const;

 private:
  FieldElem(FieldCtx ctx, std::uint64_t v) : ctx_(std::move(ctx)), v_(v) {}
  FieldElem(FieldCtx ctx, std::vector<FieldElem> coords)
      : ctx_(std::move(ctx)), coords_(std::move(coords)) {}

  FieldCtx ctx_;
  std::uint64_t v_ = 0;            // prime fields
  std::vector<FieldElem> coords_;  // extensions, always ext_degree() entries

  friend class FieldCtx;
  friend FieldElem embed(const FieldElem& a, const FieldCtx& ext);
};

bool same_field(const FieldCtx& a, const FieldCtx& b);

std::vector<FieldElem> enumerate_elements(const FieldCtx& ctx,
                                          std::uint64_t ceiling = kDefaultCeiling);

/// Smallest d >= 1 with a^(q^d) == a, i.e. [GF(q)(a) : GF(q)].
/// q must be p^j with j dividing the tower exponent of a's field.
std::size_t degree_over(const FieldElem& a, std::uint64_t subfield_card);

std::uint64_t multiplicative_order(const FieldElem& a);
bool is_primitive_element(const FieldElem& a);

/// Image of a in ext, where a's field is a level of ext's tower.
FieldElem embed(const FieldElem& a, const FieldCtx& ext);
/// Inverse of embed when a actually lies in the image of sub; throws
/// Err::CoefficientNotInBase otherwise.
FieldElem project(const FieldElem& a, const FieldCtx& sub);
bool lies_in(const FieldElem& a, const FieldCtx& sub);

}  // namespace tsrforge
