#include <random>

#include "doctest.h"

#include "cremona/factor.hpp"

using namespace cremona;

namespace {

UniPoly up(std::initializer_list<long> coeffs_low_first) {
  std::vector<Rat> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly refactor_product(const UniFactorization& f) {
  UniPoly p(f.unit);
  for (auto& fm : f.factors)
    for (int i = 0; i < fm.mult; ++i) p = p * fm.poly;
  return p;
}

BiPoly refactor_product(const BiFactorization& f) {
  BiPoly p(f.unit);
  for (auto& fm : f.factors) p = p * fm.poly.pow(fm.mult);
  return p;
}

}  // namespace

TEST_CASE("univariate factorization: small splits") {
  UniPoly p = up({-1, 0, 1});
  auto f = factor_unipoly(p);
  CHECK(f.factors.size() == 2);
  CHECK(refactor_product(f) == p);
}

TEST_CASE("univariate factorization: x^4 + 4 splits over Q") {
  UniPoly p = up({4, 0, 0, 0, 1});
  auto f = factor_unipoly(p);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].poly.degree() == 2);
  CHECK(f.factors[1].poly.degree() == 2);
  CHECK(refactor_product(f) == p);
}

TEST_CASE("univariate factorization: irreducibles stay whole") {
  for (auto p : {up({1, 1, 1}), up({-2, 0, 1}), up({1, 0, 0, 2}),
                 up({7, 3, 0, 0, 0, 1})}) {
    auto f = factor_unipoly(p);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].mult == 1);
    CHECK(refactor_product(f) == p);
  }
}

TEST_CASE("univariate factorization: units and multiplicities") {
  // 6x^2 + 5x + 1 = (2x+1)(3x+1)
  auto f = factor_unipoly(up({1, 5, 6}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.unit == Rat(1));
  // (x+2)^2 (x-1)^3 scaled by -1/2
  UniPoly p = (up({2, 1}) * up({2, 1}) * up({-1, 1}) * up({-1, 1}) * up({-1, 1})) * Rat(-1, 2);
  auto g = factor_unipoly(p);
  CHECK(g.unit == Rat(-1, 2));
  int total = 0;
  for (auto& fm : g.factors) total += fm.mult * fm.poly.degree();
  CHECK(total == 5);
  CHECK(refactor_product(g) == p);
}

TEST_CASE("univariate factorization: cyclotomic-style product") {
  // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
  auto f = factor_unipoly(up({-1, 0, 0, 0, 0, 0, 1}));
  CHECK(f.factors.size() == 4);
  CHECK(refactor_product(f) == up({-1, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("univariate factorization: degree cap is enforced") {
  std::vector<Rat> c(14, Rat(0));
  c[0] = Rat(1);
  c[13] = Rat(1);
  CHECK_THROWS_AS(factor_unipoly(UniPoly(c)), Error);
}

TEST_CASE("univariate factorization: randomized round trips") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> coeff(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly p(Rat(1));
    int pieces = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < pieces; ++i) {
      int d = 1 + static_cast<int>(rng() % 3);
      std::vector<Rat> c(d + 1);
      for (int j = 0; j <= d; ++j) c[j] = Rat(coeff(rng));
      while (c[d] == 0) c[d] = Rat(coeff(rng));
      p = p * UniPoly(c);
    }
    if (p.degree() > 12 || p.degree() < 1) continue;
    auto f = factor_unipoly(p);
    CHECK(refactor_product(f) == p);
    for (auto& fm : f.factors) {
      auto sub = factor_unipoly(fm.poly);
      CHECK(sub.factors.size() == 1);  // reported factors are irreducible
      CHECK(sub.factors[0].mult == 1);
    }
  }
}

TEST_CASE("bivariate factorization: difference of squares") {
  BiPoly p = BiPoly::var_x() * BiPoly::var_x() - BiPoly::var_y() * BiPoly::var_y();
  auto f = factor_bipoly(p);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].poly.total_degree() == 1);
  CHECK(f.factors[1].poly.total_degree() == 1);
  CHECK(refactor_product(f) == p);
}

TEST_CASE("bivariate factorization: irreducible quadric") {
  BiPoly p = BiPoly::var_x() * BiPoly::var_x() + BiPoly::var_y() * BiPoly::var_y();
  auto f = factor_bipoly(p);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].mult == 1);
}

TEST_CASE("bivariate factorization: multiplicities and content") {
  BiPoly u = BiPoly::var_x(), v = BiPoly::var_y();
  // (y^2 - 1) * (x + y)^2 * (x - 2y)
  BiPoly p = (v * v - BiPoly(Rat(1))) * (u + v) * (u + v) * (u - v * Rat(2));
  auto f = factor_bipoly(p);
  CHECK(refactor_product(f) == p);
  int linear_sq = 0;
  for (auto& fm : f.factors)
    if (fm.mult == 2) linear_sq++;
  CHECK(linear_sq == 1);
  CHECK(f.factors.size() == 4);  // y-1, y+1, (x+y)^2, x-2y
}

TEST_CASE("bivariate factorization: quartic split") {
  BiPoly u = BiPoly::var_x(), v = BiPoly::var_y();
  BiPoly p = (u * u + v * v) * (u * u - v * v * Rat(2));
  auto f = factor_bipoly(p);
  CHECK(refactor_product(f) == p);
  CHECK(f.factors.size() == 2);
}

TEST_CASE("bivariate gcd") {
  BiPoly u = BiPoly::var_x(), v = BiPoly::var_y();
  BiPoly a = u * u - v * v;
  BiPoly b = u * u + u * v * Rat(2) + v * v;
  BiPoly g = bipoly_gcd(a, b);
  CHECK(g == u + v);
  CHECK(bipoly_gcd(u + v, u - v).is_constant());
  CHECK(bipoly_gcd(BiPoly(), a) == canonical_bipoly(a));
  // content interplay: common pure-y factor
  BiPoly c = (v - BiPoly(Rat(1))) * (u + v);
  BiPoly d = (v - BiPoly(Rat(1))) * (u - v);
  CHECK(bipoly_gcd(c, d) == v - BiPoly(Rat(1)));
}

TEST_CASE("bivariate resultants eliminate one variable") {
  BiPoly u = BiPoly::var_x(), v = BiPoly::var_y();
  // res_x(x - y, x + y) = 2y
  UniPoly r = resultant_x(u - v, u + v);
  CHECK(r == UniPoly(std::vector<Rat>{Rat(0), Rat(2)}));
  // res_y(x - y, x + y) = -2x (the eliminated variable has coefficient -1)
  UniPoly s = resultant_y(u - v, u + v);
  CHECK(s == UniPoly(std::vector<Rat>{Rat(0), Rat(-2)}));
  // shared factor forces the zero polynomial
  CHECK(resultant_x((u - v) * (u + v), (u - v) * u).is_zero());
  // circle against hyperbola: res_x(x^2+y^2-1, x*y-1)
  BiPoly circle = u * u + v * v - BiPoly(Rat(1));
  BiPoly hyp = u * v - BiPoly(Rat(1));
  UniPoly t = resultant_x(circle, hyp);
  // at y=t the x-roots of x*y=1 give x=1/t; plug into the circle: (1 + t^4 - t^2)/t^2, resultant = t^4 - t^2 + 1
  CHECK(t == UniPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)}));
}
