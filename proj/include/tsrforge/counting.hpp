#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tsrforge/fields.hpp"
#include "tsrforge/poly.hpp"

namespace tsrforge {

/// One closed-form-vs-enumeration verification record.
struct CountReport {
  std::string label;
  std::int64_t m = 0, n = 0;
  std::uint64_t q = 0;
  std::optional<std::int64_t> closed_form;
  std::optional<std::int64_t> enumerated;
  std::optional<bool> match;

  void finish() {
    if (closed_form && enumerated) match = (*closed_form == *enumerated);
  }
};

/// Number of n x n matrices over GF(q) with characteristic polynomial f,
/// evaluated exactly in integers from the factorization type of f.
std::int64_t n_chi(const Poly& f);

enum class TsrClass { Irreducible, Primitive };

/// The m = 1 / n = 1 boundary counts (exactly one of m, n must be 1).
std::int64_t edge_counts(std::size_t m, std::size_t n, std::uint64_t q, TsrClass which);

/// |S_q(m,n)|/m * |GL_m(GF(q))|/(q^m - 1) via the actual pair enumeration.
std::int64_t tsri_via_s(std::size_t m, std::size_t n, const FieldCtx& ctx,
                        std::uint64_t field_ceiling = 4096,
                        std::uint64_t g_ceiling = 10000);

/// |S_q(m,2)| in closed form, m > 1.
std::int64_t n_q_m2(std::size_t m, std::uint64_t q);
/// |V_m(a)| for any admissible a, m > 1.
std::int64_t v_count(std::size_t m, std::uint64_t q);

/// Closed-form count of irreducible order-two TSRs, m > 1.
std::int64_t tsri_m2(std::size_t m, std::uint64_t q);

/// Number of self-reciprocal irreducible monic polynomials of degree 2m.
std::int64_t carlitz_srim(std::size_t m, std::uint64_t q);

struct Bounds {
  std::int64_t tsri_upper = 0;
  std::int64_t tsrp_upper = 0;
};
Bounds bounds(std::size_t m, std::size_t n, std::uint64_t q);

enum class SigmaKind { Primitive, Irreducible };

/// Word-oriented LFSR counts. The irreducible variant is evaluated exactly as
/// displayed in its source, i.e. without a 1/(mn) normalization, so at m = 1
/// it equals mn * count_irreducible(mn, q) rather than the irreducible count
/// itself; verify reports label it accordingly.
std::int64_t sigma_lfsr_counts(std::size_t m, std::size_t n, std::uint64_t q, SigmaKind kind);

}  // namespace tsrforge
