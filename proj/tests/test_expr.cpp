#include <doctest.h>

#include <random>

#include "uhfkron/error.hpp"
#include "uhfkron/expr.hpp"
#include "uhfkron/random.hpp"

using namespace uhfkron;

TEST_SUITE("expr") {
  TEST_CASE("witness element") {
    const AlgebraElement x = parse_element("E[4](2,2) - E[4](3,3)");
    const Signature s{4};
    CHECK(x == AlgebraElement::matrix_unit(s, {{2}, {2}}) - AlgebraElement::matrix_unit(s, {{3}, {3}}));
    CHECK(parse_element("E[4](2,2)-E[4](3,3)") == x);
  }

  TEST_CASE("tensor chains, scalars and products") {
    CHECK(parse_element("E[2](1,2) (x) E[2](2,1)") == AlgebraElement::matrix_unit(Signature{2, 2}, {{1, 2}, {2, 1}}));
    const AlgebraElement y = parse_element("(2,-1) * E[3](1,3)");
    CHECK(y.coefficient({{1}, {3}}) == Complex(2.0, -1.0));
    CHECK(parse_element("E[2](1,2) * E[2](2,1)") == AlgebraElement::matrix_unit(Signature{2}, {{1}, {1}}));
    CHECK(parse_element("-0.5*E[2](1,1)").coefficient({{1}, {1}}) == Complex(-0.5, 0.0));
    CHECK(parse_element("2*(E[2](1,1) + E[2](2,2))") == Complex(2.0, 0.0) * AlgebraElement::identity(Signature{2}));
    CHECK(parse_element("E[2](1,2)\n  (x) E[3](3,1)").signature() == Signature{2, 3});
  }

  TEST_CASE("index errors") {
    try {
      (void)parse_element("E[2](3,1)");
      FAIL("expected error");
    } catch (const ParseError&) {
      FAIL("index range is a validation error, not a syntax error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::validation);
      CHECK(std::string(e.what()).find("row index 3 exceeds dimension 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_element("E[1](1,1)"), Error);
    try {
      (void)parse_element("E[2](1,1) + E[3](1,1)");
      FAIL("expected mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::signature_mismatch);
    }
  }

  TEST_CASE("syntax errors carry line and column") {
    try {
      (void)parse_element("E[2](1,1) +\n  E[2](1,");
      FAIL("expected parse error");
    } catch (const ParseError& e) {
      CHECK(e.code() == ErrorCode::parse);
      CHECK(e.line() == 2);
      CHECK(e.column() == 10);
    }
    CHECK_THROWS_AS(parse_element(""), ParseError);
    CHECK_THROWS_AS(parse_element("E[2](1,1) E[2](1,1)"), ParseError);
    CHECK_THROWS_AS(parse_element("F[2](1,1)"), ParseError);
  }

  TEST_CASE("format") {
    CHECK(format_element(parse_element("E[2](1,2) (x) E[2](2,1)")) == "(1,0)*E[2](1,2) (x) E[2](2,1)");
    CHECK(format_element(AlgebraElement(Signature{2, 3})) == "0*E[2](1,1) (x) E[3](1,1)");
    CHECK(parse_element(format_element(AlgebraElement(Signature{2, 3}))).is_zero());
  }

  TEST_CASE("print then parse is the identity") {
    std::mt19937_64 rng(83);
    for (const Signature& sig : {Signature{2}, Signature{2, 3}, Signature{4, 2, 3}}) {
      for (int trial = 0; trial < 20; ++trial) {
        const AlgebraElement x = random_element(sig, rng, 7);
        const AlgebraElement back = parse_element(format_element(x));
        CHECK(back.units() == x.units());
        CHECK(back.signature() == x.signature());
      }
    }
  }
}
