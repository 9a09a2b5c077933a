#include "doctest.h"

#include "cremona/unipoly.hpp"

using namespace cremona;

namespace {

UniPoly up(std::initializer_list<long> coeffs_low_first) {
  std::vector<Rat> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("arithmetic and division") {
  UniPoly a = up({-1, 0, 1});      // x^2 - 1
  UniPoly b = up({1, 1});          // x + 1
  auto [q, r] = divmod(a, b);
  CHECK(q == up({-1, 1}));
  CHECK(r.is_zero());
  CHECK(exact_div(a, b) == up({-1, 1}));
  CHECK(divides(b, a));
  CHECK_FALSE(divides(up({2, 1}), a));
  CHECK(a.eval(Rat(3)) == Rat(8));
  CHECK((a * b).degree() == 3);
}

TEST_CASE("gcd is monic and correct") {
  UniPoly a = up({-1, 0, 1});     // (x-1)(x+1)
  UniPoly b = up({1, 2, 1});      // (x+1)^2
  CHECK(poly_gcd(a, b) == up({1, 1}));
  CHECK(poly_gcd(up({2}), a).degree() == 0);
  CHECK(poly_gcd(UniPoly(), UniPoly()).is_zero());
  // scaled inputs give the same monic gcd
  CHECK(poly_gcd(a * Rat(7, 3), b * Rat(-2)) == up({1, 1}));
}

TEST_CASE("squarefree part strips multiplicities") {
  UniPoly p = up({1, 1}) * up({1, 1}) * up({-2, 1});  // (x+1)^2 (x-2)
  UniPoly sf = squarefree_part(p);
  CHECK(sf.degree() == 2);
  CHECK(divides(up({1, 1}), sf));
  CHECK(divides(up({-2, 1}), sf));
}

TEST_CASE("resultant along the remainder sequence") {
  CHECK(resultant(up({-1, 1}), up({1, 1})) == Rat(2));
  CHECK(resultant(up({1, 0, 1}), up({-2, 0, 1})) == Rat(9));
  // common root forces zero
  CHECK(resultant(up({-1, 1}) * up({3, 1}), up({-1, 1})) == Rat(0));
  // constant cases
  CHECK(resultant(up({5}), up({1, 2, 3})) == Rat(25));
}

TEST_CASE("real root counting") {
  UniPoly p = up({-2, 0, 1});  // x^2 - 2
  CHECK(count_real_roots(p) == 2);
  CHECK(count_real_roots(p, Rat(0), Rat(2)) == 1);
  CHECK(count_real_roots(up({1, 0, 1})) == 0);
  // multiple roots are counted once
  CHECK(count_real_roots(up({1, 1}) * up({1, 1})) == 1);
}

TEST_CASE("largest real root isolation") {
  Rat w(1, 1000000);
  SUBCASE("irrational root gets a narrow interval") {
    auto iv = isolate_largest_real_root(up({-2, 0, 1}), w);
    REQUIRE(iv.has_value());
    CHECK(iv->hi - iv->lo <= w);
    CHECK(iv->lo <= Rat(1414214, 1000000));
    CHECK(iv->hi >= Rat(1414213, 1000000));
  }
  SUBCASE("rational largest root is exact") {
    UniPoly p = up({-2, 0, 1}) * up({-3, 1});  // roots -sqrt2, sqrt2, 3
    auto iv = isolate_largest_real_root(p, w);
    REQUIRE(iv.has_value());
    CHECK(iv->exact());
    CHECK(iv->lo == Rat(3));
  }
  SUBCASE("no real root") {
    CHECK_FALSE(isolate_largest_real_root(up({1, 0, 1}), w).has_value());
  }
  SUBCASE("linear") {
    auto iv = isolate_largest_real_root(up({3, 2}), w);
    REQUIRE(iv.has_value());
    CHECK(iv->exact());
    CHECK(iv->lo == Rat(-3, 2));
  }
}

TEST_CASE("rational roots") {
  // 2x^3 - 3x^2 - 3x + 2 = (x+1)(2x-1)(x-2)
  auto rs = rational_roots(up({2, -3, -3, 2}));
  REQUIRE(rs.size() == 3);
  CHECK(rs[0] == Rat(-1));
  CHECK(rs[1] == Rat(1, 2));
  CHECK(rs[2] == Rat(2));
  CHECK(rational_roots(up({1, 0, 1})).empty());
}

TEST_CASE("integer form splits content") {
  UniPoly p = up({2, 4, 6}) * Rat(1, 4);  // (1/2) + x + (3/2)x^2
  IntegerForm f = integer_form(p);
  CHECK(f.content == Rat(1, 2));
  REQUIRE(f.prim.size() == 3);
  CHECK(f.prim[0] == 1);
  CHECK(f.prim[1] == 2);
  CHECK(f.prim[2] == 3);
}
