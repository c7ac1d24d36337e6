#include "tsrforge/common.hpp"

namespace tsrforge {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::TooLarge: return "TooLarge";
    case Err::NotMonic: return "NotMonic";
    case Err::Reducible: return "Reducible";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::CtxMismatch: return "CtxMismatch";
    case Err::NotASubfield: return "NotASubfield";
    case Err::ZeroElement: return "ZeroElement";
    case Err::FactorizationOverflow: return "FactorizationOverflow";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::ConstantPolynomial: return "ConstantPolynomial";
    case Err::VanishesAtZero: return "VanishesAtZero";
    case Err::Overflow: return "Overflow";
    case Err::DimMismatch: return "DimMismatch";
    case Err::NotSquare: return "NotSquare";
    case Err::NotInvertible: return "NotInvertible";
    case Err::CeilingExceeded: return "CeilingExceeded";
    case Err::BadG: return "BadG";
    case Err::BadH: return "BadH";
    case Err::WrongDegree: return "WrongDegree";
    case Err::NotUniquelyDecomposable: return "NotUniquelyDecomposable";
    case Err::WrongDegreeElement: return "WrongDegreeElement";
    case Err::CoefficientNotInBase: return "CoefficientNotInBase";
    case Err::DomainBound: return "DomainBound";
    case Err::NonIntegerResult: return "NonIntegerResult";
    case Err::InternalInconsistency: return "InternalInconsistency";
    case Err::NotSelfReciprocal: return "NotSelfReciprocal";
    case Err::NoRepresentation: return "NoRepresentation";
    case Err::OddDegree: return "OddDegree";
    case Err::Parse: return "Parse";
  }
  return "Error";
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r < a || r > kMaxCount) fail(Err::Overflow, "integer sum exceeds 2^63-1");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMaxCount / a) fail(Err::Overflow, "integer product exceeds 2^63-1");
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp > 0) {
    if (exp & 1) r = checked_mul(r, base);
    exp >>= 1;
    if (exp) base = checked_mul(base, base);
  }
  return r;
}

}  // namespace tsrforge
