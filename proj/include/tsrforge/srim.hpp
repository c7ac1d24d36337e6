#pragma once

#include <cstdint>
#include <vector>

#include "tsrforge/poly.hpp"
#include "tsrforge/tsr.hpp"

namespace tsrforge {

/// A self-reciprocal irreducible monic f of degree 2m together with its
/// quadratic-transform witness h1 (f = X^m h1(X + 1/X)), the shifted block
/// polynomial h = h1(X + 2), and the order-two TSR built from them. The TSR
/// satisfies tsr_char_poly == f(X + 1).
struct SrimRecord {
  Poly f, h1, h;
  TsrStar tsr;
};

/// All self-reciprocal irreducible monic polynomials of degree two_m, found
/// by scanning the q^(two_m/2) palindromic monic candidates in enumeration
/// order.
std::vector<Poly> enumerate_srim(std::size_t two_m, const FieldCtx& ctx,
                                 std::uint64_t ceiling = 100000);

/// The unique monic h1 of degree m with f = X^m h1(X + 1/X), extracted by the
/// top-down coefficient recurrence and verified by re-expansion.
Poly q_transform_decompose(const Poly& f);

/// Constructive correspondence: srim f of degree 2m -> TSR in normal form
/// (g = 1 + X, A = companion(h1(X + 2))) whose characteristic polynomial is
/// f(X + 1).
SrimRecord srim_to_tsr(const Poly& f);

/// Over GF(2): the attainable irreducible characteristic polynomials of
/// order-two TSRs are exactly {f(X+1) : f srim of degree 2m}.
bool delta_srim_check(std::size_t m, const FieldCtx& ctx,
                      std::uint64_t ceiling = kDefaultCeiling);

}  // namespace tsrforge
