#include "tsrforge/text.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <string_view>

namespace tsrforge {

namespace {

using u64 = std::uint64_t;

struct Lexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char get() {
    skip_ws();
    if (pos >= s.size()) fail(Err::Parse, "unexpected end of input");
    return s[pos++];
  }
  u64 number() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail(Err::Parse, "expected a number");
    u64 v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = checked_mul(v, 10);
      v = checked_add(v, static_cast<u64>(s[pos] - '0'));
      ++pos;
    }
    return v;
  }
};

// Evaluating parser for the polynomial grammar; elements are degree-0 results.
struct PolyParser {
  Lexer lex;
  const FieldCtx& ctx;

  PolyParser(std::string_view s, const FieldCtx& c) : lex{s}, ctx(c) {}

  Poly generator_for(char sym) {
    std::size_t want = 0;
    switch (sym) {
      case 't': want = 1; break;
      case 'u': want = 2; break;
      case 'v': want = 3; break;
      case 'w': want = 4; break;
      default: fail(Err::Parse, std::string("unknown symbol '") + sym + "'");
    }
    if (want > ctx.tower_height())
      fail(Err::Parse, std::string("symbol '") + sym + "' has no level in this field");
    std::vector<FieldCtx> chain{ctx};
    while (!chain.back().is_prime()) chain.push_back(chain.back().base());
    for (const auto& c : chain)
      if (c.tower_height() == want)
        return Poly::constant(embed(c.generator(), ctx));
    fail(Err::Parse, "tower level not found");
  }

  Poly atom() {
    char c = lex.peek();
    if (c == '(') {
      lex.get();
      Poly e = expr();
      if (lex.get() != ')') fail(Err::Parse, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      u64 v = lex.number();
      if (v > static_cast<u64>(std::numeric_limits<std::int64_t>::max()))
        fail(Err::Parse, "integer literal too large");
      return Poly::constant(ctx.from_integer(static_cast<std::int64_t>(v)));
    }
    if (c == 'x') {
      lex.get();
      return Poly::x(ctx);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      lex.get();
      return generator_for(c);
    }
    fail(Err::Parse, std::string("unexpected character '") + c + "'");
  }

  Poly factor() {
    Poly a = atom();
    if (lex.peek() == '^') {
      lex.get();
      u64 e = lex.number();
      a = a.pow(e);
    }
    return a;
  }

  Poly term() {
    Poly a = factor();
    while (lex.peek() == '*') {
      lex.get();
      a = a * factor();
    }
    return a;
  }

  Poly expr() {
    bool neg = false;
    if (lex.peek() == '-') {
      lex.get();
      neg = true;
    } else if (lex.peek() == '+') {
      lex.get();
    }
    Poly a = term();
    if (neg) a = -a;
    while (true) {
      char c = lex.peek();
      if (c == '+') {
        lex.get();
        a = a + term();
      } else if (c == '-') {
        lex.get();
        a = a - term();
      } else {
        break;
      }
    }
    return a;
  }

  Poly run() {
    Poly p = expr();
    if (!lex.eof()) fail(Err::Parse, "trailing characters after polynomial");
    return p;
  }
};

}  // namespace

Poly parse_poly(const FieldCtx& ctx, const std::string& s) {
  return PolyParser(s, ctx).run();
}

FieldElem parse_element(const FieldCtx& ctx, const std::string& s) {
  Poly p = parse_poly(ctx, s);
  if (p.degree() > 0) fail(Err::Parse, "expected a field element, got a polynomial in x");
  return p.coeff(0);
}

std::string field_descriptor(const FieldCtx& ctx) {
  if (ctx.is_prime()) return std::to_string(ctx.characteristic());
  const FieldCtx& b = ctx.base();
  std::string bs = b.is_prime() ? std::to_string(b.characteristic())
                                : "(" + field_descriptor(b) + ")";
  std::size_t k = ctx.ext_degree();
  std::string head = bs + "^" + std::to_string(k);
  if (k > 1) {
    FieldCtx def = default_extension(b, k);
    if (modulus_poly(def) == modulus_poly(ctx)) return head;
  }
  return head + ":" + modulus_poly(ctx).str();
}

FieldCtx parse_field(const std::string& s) {
  std::string desc = s;
  std::string modstr;
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    desc = s.substr(0, colon);
    modstr = s.substr(colon + 1);
  }
  // base part: "p", "p^k", or "(descriptor)^k"
  Lexer lex{desc};
  FieldCtx base = make_prime_field(2);  // placeholder, reassigned below
  if (lex.peek() == '(') {
    lex.get();
    std::size_t depth = 1, start = lex.pos;
    while (depth > 0) {
      if (lex.pos >= desc.size()) fail(Err::Parse, "unbalanced parentheses in descriptor");
      char c = desc[lex.pos++];
      if (c == '(') ++depth;
      if (c == ')') --depth;
    }
    base = parse_field(desc.substr(start, lex.pos - 1 - start));
  } else {
    u64 p = lex.number();
    if (lex.peek() != '^' && modstr.empty() && lex.eof()) {
      // plain integer: prime field, or shorthand for a default extension
      auto pp = prime_power_decompose(p);
      if (!pp) fail(Err::NotPrime, std::to_string(p) + " is not a prime power");
      if (pp->second == 1) return make_prime_field(p);
      return default_extension(make_prime_field(pp->first), pp->second);
    }
    base = make_prime_field(p);
  }
  if (lex.peek() != '^') fail(Err::Parse, "expected '^' in field descriptor");
  lex.get();
  u64 k = lex.number();
  if (!lex.eof()) fail(Err::Parse, "trailing characters in field descriptor");
  if (k < 1) fail(Err::Parse, "extension degree must be >= 1");
  if (modstr.empty()) return default_extension(base, k);
  Poly mod = parse_poly(base, modstr);
  if (mod.degree() != static_cast<int>(k))
    fail(Err::Parse, "modulus degree does not match descriptor");
  return extend(base, mod);
}

Json poly_to_json(const Poly& f) {
  Json j;
  j["field"] = field_descriptor(f.ctx());
  Json cs = Json::array();
  for (const auto& c : f.coeffs()) cs.push_back(c.str());
  j["coeffs"] = cs;
  return j;
}

Poly poly_from_json(const Json& j) {
  FieldCtx ctx = parse_field(j.at("field").get<std::string>());
  std::vector<FieldElem> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(parse_element(ctx, c.get<std::string>()));
  return Poly(ctx, std::move(cs));
}

Json matrix_to_json(const Matrix& a) {
  Json j;
  j["field"] = field_descriptor(a.ctx());
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a.at(r, c).str());
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

Matrix matrix_from_json(const Json& j) {
  FieldCtx ctx = parse_field(j.at("field").get<std::string>());
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  Matrix m(ctx, rows, cols);
  const Json& entries = j.at("entries");
  if (entries.size() != rows) fail(Err::Parse, "row count mismatch");
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) fail(Err::Parse, "column count mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, parse_element(ctx, entries[r][c].get<std::string>()));
  }
  return m;
}

Json tsr_to_json(const TsrStar& t) {
  Json j;
  j["m"] = t.m;
  j["n"] = t.n;
  j["field"] = field_descriptor(t.ctx());
  Json g = Json::array();
  for (const auto& c : t.g.coeffs()) g.push_back(c.str());
  j["g"] = g;
  Json rows = Json::array();
  for (std::size_t r = 0; r < t.a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < t.a.cols(); ++c) row.push_back(t.a.at(r, c).str());
    rows.push_back(row);
  }
  j["A"] = rows;
  return j;
}

TsrStar tsr_from_json(const Json& j) {
  FieldCtx ctx = parse_field(j.at("field").get<std::string>());
  std::size_t m = j.at("m").get<std::size_t>();
  std::size_t n = j.at("n").get<std::size_t>();
  std::vector<FieldElem> gc;
  for (const auto& c : j.at("g")) gc.push_back(parse_element(ctx, c.get<std::string>()));
  Poly g(ctx, std::move(gc));
  Matrix a(ctx, m, m);
  const Json& rows = j.at("A");
  if (rows.size() != m) fail(Err::Parse, "block size mismatch");
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      a.set(r, c, parse_element(ctx, rows[r][c].get<std::string>()));
  return TsrStar(m, n, std::move(g), std::move(a));
}

Json report_to_json(const CountReport& r) {
  Json j;
  j["label"] = r.label;
  j["m"] = r.m;
  j["n"] = r.n;
  j["q"] = r.q;
  j["closed_form"] = r.closed_form ? Json(*r.closed_form) : Json(nullptr);
  j["enumerated"] = r.enumerated ? Json(*r.enumerated) : Json(nullptr);
  j["match"] = r.match ? Json(*r.match) : Json(nullptr);
  return j;
}

std::string report_to_csv_row(const CountReport& r) {
  std::string s = r.label + "," + std::to_string(r.m) + "," + std::to_string(r.n) + "," +
                  std::to_string(r.q) + ",";
  if (r.closed_form) s += std::to_string(*r.closed_form);
  s += ",";
  if (r.enumerated) s += std::to_string(*r.enumerated);
  s += ",";
  if (r.match) s += (*r.match ? "true" : "false");
  return s;
}

Json srim_record_to_json(const SrimRecord& r) {
  Json j;
  j["field"] = field_descriptor(r.f.ctx());
  j["f"] = r.f.str();
  j["h1"] = r.h1.str();
  j["h"] = r.h.str();
  j["tsr"] = tsr_to_json(r.tsr);
  return j;
}

}  // namespace tsrforge
