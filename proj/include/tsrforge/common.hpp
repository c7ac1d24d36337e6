#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tsrforge {

enum class Err {
  NotPrime,
  TooLarge,
  NotMonic,
  Reducible,
  DivisionByZero,
  CtxMismatch,
  NotASubfield,
  ZeroElement,
  FactorizationOverflow,
  ZeroPolynomial,
  ConstantPolynomial,
  VanishesAtZero,
  Overflow,
  DimMismatch,
  NotSquare,
  NotInvertible,
  CeilingExceeded,
  BadG,
  BadH,
  WrongDegree,
  NotUniquelyDecomposable,
  WrongDegreeElement,
  CoefficientNotInBase,
  DomainBound,
  NonIntegerResult,
  InternalInconsistency,
  NotSelfReciprocal,
  NoRepresentation,
  OddDegree,
  Parse,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const noexcept { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

// Checked unsigned arithmetic; results must stay below 2^63 so they remain
// representable as nonnegative int64 in every output format.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

inline constexpr std::uint64_t kMaxCount = (std::uint64_t(1) << 63) - 1;
inline constexpr std::uint64_t kDefaultCeiling = 10'000'000;

}  // namespace tsrforge
