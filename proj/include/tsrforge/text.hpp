#pragma once

#include <string>

#include <json.hpp>

#include "tsrforge/counting.hpp"
#include "tsrforge/matrix.hpp"
#include "tsrforge/poly.hpp"
#include "tsrforge/srim.hpp"
#include "tsrforge/tsr.hpp"

namespace tsrforge {

using Json = nlohmann::ordered_json;

/// Field descriptors: "p" for prime fields, "p^k" for default extensions,
/// "p^k:modulus" with an explicit modulus in the polynomial grammar. A plain
/// prime power like "4" is accepted as shorthand for its default extension.
std::string field_descriptor(const FieldCtx& ctx);
FieldCtx parse_field(const std::string& s);

/// Polynomial grammar: sum of terms [coeff*]x[^exp] with +/- separators;
/// coefficients use the field element syntax (parenthesized when non-atomic).
Poly parse_poly(const FieldCtx& ctx, const std::string& s);
FieldElem parse_element(const FieldCtx& ctx, const std::string& s);

Json poly_to_json(const Poly& f);
Poly poly_from_json(const Json& j);
Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j);
Json tsr_to_json(const TsrStar& t);
TsrStar tsr_from_json(const Json& j);
Json report_to_json(const CountReport& r);
std::string report_to_csv_row(const CountReport& r);
inline const char* report_csv_header() { return "label,m,n,q,closed_form,enumerated,match"; }
Json srim_record_to_json(const SrimRecord& r);

}  // namespace tsrforge
