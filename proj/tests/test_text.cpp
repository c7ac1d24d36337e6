#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tsrforge/text.hpp"

using namespace tsrforge;

TEST_CASE("field descriptors round trip") {
  for (const char* d : {"2", "3", "5", "2^2", "2^4", "3^2", "5^2"}) {
    FieldCtx f = parse_field(d);
    CHECK(field_descriptor(f) == d);
    CHECK(parse_field(field_descriptor(f)) == f);
  }
  CHECK(parse_field("4") == parse_field("2^2"));
  CHECK(parse_field("9") == parse_field("3^2"));
  CHECK(parse_field("25") == parse_field("5^2"));
  FieldCtx f2 = make_prime_field(2);
  FieldCtx expl = parse_field("2^2:x^2+x+1");
  CHECK(expl == default_extension(f2, 2));
  CHECK(field_descriptor(expl) == "2^2");  // default modulus prints short
  // a non-default modulus keeps its explicit form
  FieldCtx f16b = parse_field("2^4:x^4+x^3+1");
  CHECK(field_descriptor(f16b) == "2^4:x^4+x^3+1");
  CHECK(parse_field(field_descriptor(f16b)) == f16b);
  CHECK_THROWS_AS(parse_field("6"), Error);
  CHECK_THROWS_AS(parse_field("2^2:x^2+1"), Error);  // reducible modulus
  CHECK_THROWS_AS(parse_field("x"), Error);
}

TEST_CASE("tower descriptors") {
  FieldCtx tower = default_extension(parse_field("2^2"), 2);
  std::string d = field_descriptor(tower);
  CHECK(parse_field(d) == tower);
}

TEST_CASE("polynomial grammar") {
  FieldCtx f2 = make_prime_field(2);
  CHECK(parse_poly(f2, "x^4+x+1") == Poly::from_ints(f2, {1, 1, 0, 0, 1}));
  CHECK(parse_poly(f2, " x^2 + x ") == Poly::from_ints(f2, {0, 1, 1}));
  FieldCtx f3 = make_prime_field(3);
  CHECK(parse_poly(f3, "x^2-x-1") == Poly::from_ints(f3, {2, 2, 1}));
  CHECK(parse_poly(f3, "2*x+1") == Poly::from_ints(f3, {1, 2}));
  FieldCtx f4 = parse_field("2^2");
  FieldElem t = f4.generator();
  CHECK(parse_poly(f4, "(t+1)*x^2+t") == Poly(f4, {t, f4.zero(), t + f4.one()}));
  CHECK(parse_poly(f4, "t^2*x") == Poly(f4, {f4.zero(), t * t}));
  CHECK_THROWS_AS(parse_poly(f2, "t+1"), Error);   // no generator in a prime field
  CHECK_THROWS_AS(parse_poly(f2, "x^2++1"), Error);
  CHECK_THROWS_AS(parse_poly(f2, "y+1"), Error);
  // printing round trip
  for (const char* s : {"x^4+x+1", "x^2+x", "1", "0", "x"}) {
    Poly p = parse_poly(f2, s);
    CHECK(parse_poly(f2, p.str()) == p);
    CHECK(p.str() == s);
  }
  Poly q(f4, {t, t + f4.one(), f4.one()});
  CHECK(parse_poly(f4, q.str()) == q);
}

TEST_CASE("element grammar in towers") {
  FieldCtx f16 = default_extension(parse_field("2^2"), 2);
  FieldElem u = f16.generator();
  FieldElem t = embed(parse_field("2^2").generator(), f16);
  CHECK(parse_element(f16, "(t+1)*u+t") == (t + f16.one()) * u + t);
  CHECK(parse_element(f16, u.str()) == u);
  CHECK_THROWS_AS(parse_element(f16, "x+1"), Error);  // polynomial, not element
}

TEST_CASE("polynomial JSON form") {
  FieldCtx f4 = parse_field("2^2");
  Poly p = parse_poly(f4, "(t+1)*x^2+t*x+1");
  Json j = poly_to_json(p);
  CHECK(j["field"] == "2^2");
  CHECK(j["coeffs"].size() == 3);
  CHECK(j["coeffs"][0] == "1");
  CHECK(poly_from_json(j) == p);
}

TEST_CASE("matrix JSON form") {
  FieldCtx f3 = make_prime_field(3);
  Matrix a = Matrix::from_ints(f3, {{0, 1}, {1, 1}});
  Json j = matrix_to_json(a);
  CHECK(j["rows"] == 2);
  CHECK(j["entries"][1][1] == "1");
  CHECK(matrix_from_json(j) == a);
}

TEST_CASE("register JSON form") {
  FieldCtx f2 = make_prime_field(2);
  TsrStar t(2, 2, parse_poly(f2, "x+1"), companion(parse_poly(f2, "x^2+x+1")));
  Json j = tsr_to_json(t);
  CHECK(j["m"] == 2);
  CHECK(j["n"] == 2);
  CHECK(j["field"] == "2");
  CHECK(j["g"].size() == 2);
  TsrStar back = tsr_from_json(j);
  CHECK(back.g == t.g);
  CHECK(back.a == t.a);
}

TEST_CASE("count report emission") {
  CountReport r;
  r.label = "order_two_count";
  r.m = 2;
  r.n = 2;
  r.q = 2;
  r.closed_form = 2;
  r.enumerated = 2;
  r.finish();
  Json j = report_to_json(r);
  CHECK(j["label"] == "order_two_count");
  CHECK(j["closed_form"] == 2);
  CHECK(j["match"] == true);
  CHECK(report_to_csv_row(r) == "order_two_count,2,2,2,2,2,true");
  CountReport bare;
  bare.label = "enumeration_only";
  bare.enumerated = 7;
  Json j2 = report_to_json(bare);
  CHECK(j2["closed_form"].is_null());
  CHECK(report_to_csv_row(bare) == "enumeration_only,0,0,0,,7,");
}

TEST_CASE("srim record emission") {
  FieldCtx f2 = make_prime_field(2);
  SrimRecord rec = srim_to_tsr(parse_poly(f2, "x^4+x^3+x^2+x+1"));
  Json j = srim_record_to_json(rec);
  CHECK(j["f"] == "x^4+x^3+x^2+x+1");
  CHECK(j["h1"] == "x^2+x+1");
  CHECK(j["tsr"]["m"] == 2);
}
