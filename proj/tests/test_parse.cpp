#include "doctest.h"

#include "cremona/parse.hpp"

using namespace cremona;

TEST_CASE("basic expressions") {
  CHECK(parse_polynomial("x") == HomogPoly3::variable(0));
  CHECK(parse_polynomial("x + y - z") ==
        HomogPoly3::variable(0) + HomogPoly3::variable(1) - HomogPoly3::variable(2));
  CHECK(parse_polynomial("x^2") == HomogPoly3::monomial(2, 0, 0, Rat(1)));
  CHECK(parse_polynomial("2*x*y") == HomogPoly3::monomial(1, 1, 0, Rat(2)));
  CHECK(parse_polynomial("0").is_zero());
}

TEST_CASE("rational coefficients") {
  CHECK(parse_polynomial("1/2*x") == HomogPoly3::monomial(1, 0, 0, Rat(1, 2)));
  CHECK(parse_polynomial("3/6*x") == HomogPoly3::monomial(1, 0, 0, Rat(1, 2)));
  CHECK(parse_polynomial("7") == HomogPoly3(Rat(7)));
}

TEST_CASE("unary minus and parentheses") {
  CHECK(parse_polynomial("-x") == -HomogPoly3::variable(0));
  CHECK(parse_polynomial("-(x - y)") ==
        HomogPoly3::variable(1) - HomogPoly3::variable(0));
  CHECK(parse_polynomial("(x + y)^2") ==
        parse_polynomial("x^2 + 2*x*y + y^2"));
  CHECK(parse_polynomial("- 2 * x ^ 2") == HomogPoly3::monomial(2, 0, 0, Rat(-2)));
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse_polynomial("  x *y+ z^ 2 ") == parse_polynomial("x*y + z^2"));
}

TEST_CASE("syntax errors carry positions") {
  for (auto bad : {"x +", "w", "x ^ y", "(x", "1/0", "x 2", "", "x**y"}) {
    CHECK_THROWS_AS(parse_polynomial(bad), Error);
  }
}

TEST_CASE("parse_form enforces homogeneity") {
  CHECK(parse_form("x*y - z^2").degree() == 2);
  CHECK_THROWS_AS(parse_form("x + x*y"), Error);
  CHECK_THROWS_AS(parse_form("0"), Error);
  CHECK_THROWS_AS(parse_form("x - x"), Error);
}
