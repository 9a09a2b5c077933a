#include "doctest.h"

#include "cremona/factor.hpp"
#include "cremona/homogpoly.hpp"
#include "cremona/parse.hpp"

using namespace cremona;

TEST_CASE("homogeneity checks and degree") {
  HomogPoly3 p = parse_polynomial("x^2 + 2*x*y + y^2");
  CHECK(p.is_homogeneous());
  CHECK(p.degree() == 2);
  HomogPoly3 q = parse_polynomial("x + x*y");
  CHECK_FALSE(q.is_homogeneous());
  CHECK_THROWS_AS(q.degree(), Error);
}

TEST_CASE("canonical form scales, clears denominators and fixes sign") {
  HomogPoly3 p = parse_polynomial("-2*x^2 - 4*x*y");
  CHECK(canonical_homog(p) == parse_polynomial("x^2 + 2*x*y"));
  HomogPoly3 q = parse_polynomial("1/2*x*y - 1/3*z^2");
  CHECK(canonical_homog(q) == parse_polynomial("3*x*y - 2*z^2"));
  CHECK(canonical_homog(canonical_homog(q)) == canonical_homog(q));
}

TEST_CASE("dehomogenize and homogenize round trip") {
  HomogPoly3 p = parse_polynomial("x^3 - x*y*z + z^3");
  for (int chart = 0; chart < 3; ++chart) {
    BiPoly b = p.dehomogenize(chart);
    CHECK(homogenize(b, chart, 3) == p);
  }
}

TEST_CASE("gcd of forms") {
  HomogPoly3 a = parse_polynomial("x^2 - y^2");
  HomogPoly3 b = parse_polynomial("x^2 + 2*x*y + y^2");
  CHECK(homog_gcd(a, b) == parse_polynomial("x + y"));
  // monomial content interacts with the z-chart correctly; the canonical
  // sign puts the grlex-leading coefficient positive, so y - z wins over z - y
  HomogPoly3 c = parse_polynomial("x*z^2 - x*y^2");
  HomogPoly3 d = parse_polynomial("z^3 - y*z^2");
  CHECK(homog_gcd(c, d) == parse_polynomial("y - z"));
  CHECK(homog_gcd3(parse_polynomial("x^2*y*z"), parse_polynomial("x*y^2*z"),
                   parse_polynomial("x*y*z^2")) == parse_polynomial("x*y*z"));
}

TEST_CASE("exact division of forms") {
  HomogPoly3 a = parse_polynomial("x^2 - y^2");
  CHECK(exact_div(a, parse_polynomial("x + y")) == parse_polynomial("x - y"));
  CHECK_FALSE(divides(parse_polynomial("x + z"), a));
}

TEST_CASE("factor_homog splits monomial content and the core") {
  HomogPoly3 p = parse_polynomial("x^3*z - x*y^2*z");
  auto f = factor_homog(p);
  CHECK(f.unit == Rat(1));
  REQUIRE(f.factors.size() == 4);
  HomogPoly3 prod(Rat(1));
  for (auto& fm : f.factors) {
    CHECK(fm.mult == 1);
    CHECK(fm.poly.degree() == 1);
    prod = prod * fm.poly;
  }
  CHECK(prod * f.unit == p);
}

TEST_CASE("factor_homog handles irreducible conics and multiplicity") {
  auto f = factor_homog(parse_polynomial("x^2 + y^2 + z^2"));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].mult == 1);
  auto g = factor_homog(parse_polynomial("(x + y)^2 * (y - z)"));
  REQUIRE(g.factors.size() == 2);
  int mults = 0;
  for (auto& fm : g.factors) mults += fm.mult;
  CHECK(mults == 3);
}

TEST_CASE("factor_homog respects the degree cap") {
  HomogPoly3 p = HomogPoly3::monomial(13, 0, 0, Rat(1));
  CHECK_THROWS_AS(factor_homog(p), Error);
  HomogPoly3 q = HomogPoly3::monomial(12, 0, 0, Rat(1));
  CHECK(factor_homog(q).factors.size() == 1);
}

TEST_CASE("substitution composes maps of forms") {
  // the quadratic involution composed with itself collapses to the identity
  // after the common monomial factor is removed
  std::array<HomogPoly3, 3> sigma = {parse_polynomial("y*z"), parse_polynomial("x*z"),
                                     parse_polynomial("x*y")};
  std::array<HomogPoly3, 3> twice;
  for (int i = 0; i < 3; ++i) twice[i] = sigma[i].subst(sigma);
  HomogPoly3 g = homog_gcd3(twice[0], twice[1], twice[2]);
  CHECK(g == parse_polynomial("x*y*z"));
  CHECK(exact_div(twice[0], g) == parse_polynomial("x"));
  CHECK(exact_div(twice[1], g) == parse_polynomial("y"));
  CHECK(exact_div(twice[2], g) == parse_polynomial("z"));
}

TEST_CASE("evaluation at integer points") {
  HomogPoly3 p = parse_polynomial("x*y - z^2");
  CHECK(p.eval({Int(2), Int(3), Int(1)}) == Rat(5));
  CHECK(p.eval(Rat(1, 2), Rat(2), Rat(1)) == Rat(0));
}
