#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/parse.hpp"
#include "cremona/pic.hpp"
#include "cremona/resolution.hpp"
#include "cremona/stability.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

PlaneMap sigma_map() {
  std::array<HomogPoly3, 3> c{parse_form("y*z"), parse_form("x*z"),
                              parse_form("x*y")};
  return PlaneMap(c, c);
}

PlaneMap rotation_map() {
  std::array<HomogPoly3, 3> c{parse_form("z"), parse_form("x"),
                              parse_form("y")};
  std::array<HomogPoly3, 3> inv{parse_form("y"), parse_form("z"),
                                parse_form("x")};
  return PlaneMap(c, inv);
}

// The quadratic map whose line images walk a two-step path into a base
// point: one contracted line lands on (1:1:1), which maps onto (1:0:0);
// the other two lines land on fixed points.
PlaneMap orbit2_map() {
  std::array<HomogPoly3, 3> c{parse_form("y*z + x*z + x*y"),
                              parse_form("y*z - x*y"),
                              parse_form("y*z - x*z")};
  std::array<HomogPoly3, 3> inv{
      parse_form("(x + y - 2*z)*(x - 2*y + z)"),
      parse_form("(x + y + z)*(x - 2*y + z)"),
      parse_form("(x + y + z)*(x + y - 2*z)")};
  return PlaneMap(c, inv);
}

// Same construction with a three-step path (1:1:1) -> (1:2:3) -> (1:0:0);
// the other two lines wander without ever reaching a base point.
PlaneMap orbit3_map() {
  std::array<HomogPoly3, 3> c{parse_form("y*z - 5*x*z + 5*x*y"),
                              parse_form("y*z - 8*x*z + 9*x*y"),
                              parse_form("y*z - 10*x*z + 12*x*y")};
  std::array<HomogPoly3, 3> inv{
      parse_form("(3*x - 7*y + 4*z)*(2*x - 5*y + 3*z)"),
      parse_form("(6*x - 10*y + 5*z)*(2*x - 5*y + 3*z)"),
      parse_form("(6*x - 10*y + 5*z)*(3*x - 7*y + 4*z)")};
  return PlaneMap(c, inv);
}

// Twisted quadratic whose three line images cycle with period three.
PlaneMap shear_a_map() {
  std::array<HomogPoly3, 3> c{parse_form("y*z + 2*x*z"),
                              parse_form("x*z + 3*x*y"),
                              parse_form("y*z + x*y")};
  std::array<HomogPoly3, 3> inv{
      parse_form("(3*x + y - 3*z)*(-x + 2*y + z)"),
      parse_form("(x - 2*y + 6*z)*(-x + 2*y + z)"),
      parse_form("(x - 2*y + 6*z)*(3*x + y - 3*z)")};
  return PlaneMap(c, inv);
}

// Twisted quadratic whose line images grow forever in positive
// coordinates, so no orbit search budget ever settles them.
PlaneMap shear_b_map() {
  std::array<HomogPoly3, 3> c{parse_form("2*y*z + x*z + x*y"),
                              parse_form("y*z + 2*x*z + x*y"),
                              parse_form("y*z + x*z + 2*x*y")};
  std::array<HomogPoly3, 3> inv{
      parse_form("(-x + 3*y - z)*(-x - y + 3*z)"),
      parse_form("(3*x - y - z)*(-x - y + 3*z)"),
      parse_form("(3*x - y - z)*(-x + 3*y - z)")};
  return PlaneMap(c, inv);
}

ProjPoint pt(long a, long b, long c) {
  return make_point(Int(a), Int(b), Int(c));
}

LiftedMap plane_lift(const PlaneMap& f) {
  return LiftedMap{f, BlowupSurface{}, BlowupSurface{}};
}

BlowupSurface sorted_coordinate_tower() {
  BlowupSurface X;
  X = blowup(X, plane_point(pt(0, 0, 1)));
  X = blowup(X, plane_point(pt(0, 1, 0)));
  X = blowup(X, plane_point(pt(1, 0, 0)));
  return X;
}

LiftedMap sigma_full() {
  BlowupSurface X = sorted_coordinate_tower();
  return LiftedMap{sigma_map(), X, X};
}

SurfaceCurve proper_curve(const std::string& eq) {
  return SurfaceCurve::proper(PlaneCurve(parse_form(eq)));
}

const DestabTriple* find_triple(const DestabSearch& s,
                                const SurfaceCurve& c) {
  for (const DestabTriple& t : s.triples)
    if (t.curve_c == c) return &t;
  return nullptr;
}

IntMat involution_matrix() {
  return IntMat{{Int(2), Int(1), Int(1), Int(1)},
                {Int(-1), Int(0), Int(-1), Int(-1)},
                {Int(-1), Int(-1), Int(0), Int(-1)},
                {Int(-1), Int(-1), Int(-1), Int(0)}};
}

UniPoly poly_from(std::vector<long> low_first) {
  std::vector<Rat> c;
  for (long v : low_first) c.push_back(Rat(v));
  return UniPoly(c);
}

}  // namespace

TEST_CASE("orbit search classifies hits, cycles, and exhausted budgets") {
  DestabSearch s = find_destabilising(plane_lift(sigma_map()));
  CHECK(s.certified());
  CHECK(s.triples.size() == 3);
  CHECK(std::is_sorted(s.triples.begin(), s.triples.end(),
                       [](const DestabTriple& a, const DestabTriple& b) {
                         return a.curve_c < b.curve_c;
                       }));
  struct Expect {
    const char* line;
    ProjPoint image;
  };
  const Expect cases[] = {{"x", pt(1, 0, 0)},
                          {"y", pt(0, 1, 0)},
                          {"z", pt(0, 0, 1)}};
  for (const Expect& e : cases) {
    const DestabTriple* t = find_triple(s, proper_curve(e.line));
    REQUIRE(t != nullptr);
    CHECK(t->length == 1);
    REQUIRE(t->orbit.size() == 1);
    CHECK(t->orbit[0] == plane_point(e.image));
    CHECK(t->terminal_q == plane_point(e.image));
    CHECK(t->curve_d == proper_curve(e.line));
  }

  DestabSearch full = find_destabilising(sigma_full());
  CHECK(full.certified());
  CHECK(full.triples.empty());

  DestabSearch cyc = find_destabilising(plane_lift(shear_a_map()));
  CHECK(cyc.certified());
  CHECK(cyc.triples.empty());

  DestabSearch capped = find_destabilising(plane_lift(shear_b_map()), 10);
  CHECK(capped.triples.empty());
  CHECK(!capped.certified());
  CHECK(capped.capped.size() == 3);
}

TEST_CASE("orbit search follows multi-step paths into base points") {
  DestabSearch s2 = find_destabilising(plane_lift(orbit2_map()));
  CHECK(s2.certified());
  REQUIRE(s2.triples.size() == 1);
  const DestabTriple& t2 = s2.triples[0];
  CHECK(t2.curve_c == proper_curve("x"));
  CHECK(t2.length == 2);
  REQUIRE(t2.orbit.size() == 2);
  CHECK(t2.orbit[0] == plane_point(pt(1, 1, 1)));
  CHECK(t2.orbit[1] == plane_point(pt(1, 0, 0)));
  CHECK(t2.terminal_q == plane_point(pt(1, 0, 0)));
  CHECK(t2.curve_d == proper_curve("x + y + z"));

  DestabSearch s3 = find_destabilising(plane_lift(orbit3_map()));
  const DestabTriple* t3 = find_triple(s3, proper_curve("x"));
  REQUIRE(t3 != nullptr);
  CHECK(t3->length == 3);
  REQUIRE(t3->orbit.size() == 3);
  CHECK(t3->orbit[0] == plane_point(pt(1, 1, 1)));
  CHECK(t3->orbit[1] == plane_point(pt(1, 2, 3)));
  CHECK(t3->orbit[2] == plane_point(pt(1, 0, 0)));
  // The other two lines wander, so the search cannot settle them.
  CHECK(!s3.certified());
  CHECK(s3.capped.size() == 2);
}

TEST_CASE("orbit minimality checks both directions of the map") {
  LiftedMap sig = plane_lift(sigma_map());
  for (const DestabTriple& t : find_destabilising(sig).triples)
    CHECK(is_minimal(t, sig));

  LiftedMap o2 = plane_lift(orbit2_map());
  CHECK(is_minimal(find_destabilising(o2).triples[0], o2));

  DestabTriple dup{proper_curve("x"),
                   {plane_point(pt(1, 1, 1)), plane_point(pt(1, 1, 1))},
                   plane_point(pt(1, 1, 1)),
                   proper_curve("x"),
                   2};
  CHECK(!is_minimal(dup, sig));

  DestabTriple early{proper_curve("x"),
                     {plane_point(pt(0, 1, 0)), plane_point(pt(1, 0, 0))},
                     plane_point(pt(1, 0, 0)),
                     proper_curve("x"),
                     2};
  CHECK(!is_minimal(early, sig));  // first point already indeterminate

  DestabTriple late{proper_curve("x"),
                    {plane_point(pt(1, 1, 1)), plane_point(pt(1, 0, 0))},
                    plane_point(pt(1, 0, 0)),
                    proper_curve("x"),
                    2};
  CHECK(!is_minimal(late, sig));  // second point indeterminate backwards

  PlaneMap bare({parse_form("y*z"), parse_form("x*z"), parse_form("x*y")});
  LiftedMap no_inv = plane_lift(bare);
  DestabTriple one{proper_curve("x"),
                   {plane_point(pt(1, 0, 0))},
                   plane_point(pt(1, 0, 0)),
                   proper_curve("x"),
                   1};
  try {
    is_minimal(one, no_inv);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoInverseDeclared);
  }
}

TEST_CASE("judicious stabilization resolves the quadratic involution") {
  StabilityReport rep = stabilize_judicious(plane_lift(sigma_map()));
  REQUIRE(std::holds_alternative<Stable>(rep.status));
  CHECK(std::get<Stable>(rep.status).orbit_cap == kOrbitCapDefault);
  CHECK(rep.rounds_used == 3);
  CHECK(rep.comp_alpha == 0);
  REQUIRE(rep.blowup_log.size() == 3);
  CHECK(rep.blowup_log[0] == plane_point(pt(0, 0, 1)));
  CHECK(rep.blowup_log[1] == plane_point(pt(0, 1, 0)));
  CHECK(rep.blowup_log[2] == plane_point(pt(1, 0, 0)));
  CHECK(rep.pullback.m == involution_matrix());
  CHECK(rep.char_poly == poly_from({-1, 2, 0, -2, 1}));
  RatInterval one{Rat(1), Rat(1)};
  CHECK(rep.dyn_degree == one);
}

TEST_CASE("judicious stabilization leaves automorphisms untouched") {
  StabilityReport rep = stabilize_judicious(plane_lift(rotation_map()));
  REQUIRE(std::holds_alternative<Stable>(rep.status));
  CHECK(rep.rounds_used == 0);
  CHECK(rep.comp_alpha == 0);
  CHECK(rep.blowup_log.empty());
  IntMat id1{{Int(1)}};
  CHECK(rep.pullback.m == id1);
  RatInterval one{Rat(1), Rat(1)};
  CHECK(rep.dyn_degree == one);
}

TEST_CASE("judicious stabilization blows up exactly the two-step orbit") {
  StabilityReport rep = stabilize_judicious(plane_lift(orbit2_map()));
  REQUIRE(std::holds_alternative<Stable>(rep.status));
  CHECK(rep.rounds_used == 1);
  CHECK(rep.comp_alpha == 2);
  REQUIRE(rep.blowup_log.size() == 2);
  CHECK(rep.blowup_log[0] == plane_point(pt(1, 1, 1)));
  CHECK(rep.blowup_log[1] == plane_point(pt(1, 0, 0)));
  CHECK(rep.char_poly.degree() == 3);
  Int det = mat_det(rep.pullback.m);
  CHECK((det == 1 || det == -1));
  Rat width = rep.dyn_degree.hi - rep.dyn_degree.lo;
  CHECK(width <= kRootWidthDefault);
}

TEST_CASE("stabilization rejects maps it cannot certify") {
  PlaneMap bare({parse_form("y*z"), parse_form("x*z"), parse_form("x*y")});
  try {
    stabilize_judicious(plane_lift(bare));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoInverseDeclared);
  }

  BlowupSurface one = blowup(BlowupSurface{}, plane_point(pt(0, 0, 1)));
  LiftedMap skew{sigma_map(), BlowupSurface{}, one};
  try {
    stabilize_judicious(skew);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SurfaceMismatch);
  }

  StabilityReport rep = stabilize_judicious(plane_lift(shear_b_map()), 10);
  REQUIRE(std::holds_alternative<Unknown>(rep.status));
  CHECK(!std::get<Unknown>(rep.status).reason.empty());
  CHECK(rep.rounds_used == 0);
  CHECK(rep.comp_alpha == 3);
}

TEST_CASE("graph stabilization settles the involution at the first lift") {
  StabilityReport rep = stabilize_graph(plane_lift(sigma_map()));
  REQUIRE(std::holds_alternative<Stable>(rep.status));
  CHECK(rep.rounds_used == 1);
  CHECK(rep.comp_alpha == 0);
  REQUIRE(rep.blowup_log.size() == 3);
  CHECK(rep.blowup_log[0] == plane_point(pt(0, 0, 1)));
  CHECK(rep.blowup_log[1] == plane_point(pt(0, 1, 0)));
  CHECK(rep.blowup_log[2] == plane_point(pt(1, 0, 0)));
  CHECK(rep.pullback.m == involution_matrix());
  RatInterval one{Rat(1), Rat(1)};
  CHECK(rep.dyn_degree == one);

  StabilityReport aut = stabilize_graph(plane_lift(rotation_map()));
  REQUIRE(std::holds_alternative<Stable>(aut.status));
  CHECK(aut.rounds_used == 1);
  CHECK(aut.blowup_log.empty());
  IntMat id1{{Int(1)}};
  CHECK(aut.pullback.m == id1);
}

TEST_CASE("graph stabilization needs two lifts for the two-step orbit") {
  StabilityReport rep = stabilize_graph(plane_lift(orbit2_map()));
  REQUIRE(std::holds_alternative<Stable>(rep.status));
  CHECK(rep.rounds_used == 2);
  CHECK(rep.blowup_log.size() == 6);
  Rat width = rep.dyn_degree.hi - rep.dyn_degree.lo;
  CHECK(width <= kRootWidthDefault);

  // Both styles of stabilization measure the same dynamics. The graph
  // model carries four extra classes; two of them are crushed into
  // indeterminate points, so its pullback gains a nilpotent block and the
  // characteristic polynomials differ by exactly that power of x.
  StabilityReport jud = stabilize_judicious(plane_lift(orbit2_map()));
  CHECK(mat_det(jud.pullback.m) == -1);
  CHECK(mat_det(rep.pullback.m) == 0);
  UniPoly x = UniPoly::variable();
  CHECK(rep.char_poly == x * x * x * x * jud.char_poly);
  CHECK(rep.dyn_degree.lo <= jud.dyn_degree.hi);
  CHECK(jud.dyn_degree.lo <= rep.dyn_degree.hi);
  std::vector<UniFactor> a = spectral_factors(jud.char_poly);
  std::vector<UniFactor> b = spectral_factors(rep.char_poly);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].poly == b[i].poly);
    CHECK(a[i].mult == b[i].mult);
  }

  StabilityReport wander = stabilize_graph(plane_lift(shear_b_map()), 10);
  REQUIRE(std::holds_alternative<Unknown>(wander.status));
  CHECK(wander.rounds_used == 1);
}

TEST_CASE("the orbit injection is onto exactly without one-step orbits") {
  IotaCheck triv = iota_check(sigma_full());
  CHECK(triv.certified);
  CHECK(triv.upstairs.empty());
  CHECK(triv.downstairs.empty());
  CHECK(triv.well_defined);
  CHECK(triv.injective);
  CHECK(triv.surjective);
  CHECK(triv.comp_consistent);
  CHECK(triv.comp_up == 0);
  CHECK(triv.comp_down == 0);

  IotaCheck drop = iota_check(graph_lift(plane_lift(orbit2_map())));
  CHECK(drop.certified);
  CHECK(drop.well_defined);
  CHECK(drop.injective);
  CHECK(!drop.surjective);
  CHECK(drop.comp_consistent);
  CHECK(drop.comp_up == 2);
  CHECK(drop.comp_down == 3);
  REQUIRE(drop.downstairs.size() == 1);
  CHECK(drop.downstairs[0].length == 1);
  CHECK(drop.upstairs.empty());

  IotaCheck shift = iota_check(graph_lift(plane_lift(orbit3_map())));
  CHECK(!shift.certified);  // two wandering orbits exhaust the budget
  CHECK(shift.well_defined);
  CHECK(shift.injective);
  CHECK(shift.surjective);
  CHECK(shift.comp_consistent);
  CHECK(shift.comp_up == 3);
  CHECK(shift.comp_down == 3);
  REQUIRE(shift.upstairs.size() == 1);
  CHECK(shift.upstairs[0].length == 1);
  REQUIRE(shift.downstairs.size() == 1);
  CHECK(shift.downstairs[0].length == 2);

  try {
    iota_check(plane_lift(sigma_map()));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUntangled);
  }
}

TEST_CASE("orbit lengths shift by one under the graph lift") {
  DestabSearch down2 = find_destabilising(plane_lift(orbit2_map()));
  DestabSearch up2 = find_destabilising(graph_lift(plane_lift(orbit2_map())));
  REQUIRE(down2.triples.size() == 1);
  REQUIRE(up2.triples.size() == 1);
  CHECK(down2.triples[0].length == 2);
  CHECK(up2.triples[0].length == 1);

  DestabSearch down3 = find_destabilising(plane_lift(orbit3_map()));
  DestabSearch up3 = find_destabilising(graph_lift(plane_lift(orbit3_map())));
  const DestabTriple* d3 = find_triple(down3, proper_curve("x"));
  const DestabTriple* u3 = find_triple(up3, proper_curve("x"));
  REQUIRE(d3 != nullptr);
  REQUIRE(u3 != nullptr);
  CHECK(d3->length == 3);
  CHECK(u3->length == 2);
}

TEST_CASE("factors inside the unit circle are recognized and stripped") {
  CHECK(spectral_factors(poly_from({-1, 2, 0, -2, 1})).empty());
  CHECK(spectral_factors(poly_from({0, 0, 0, 1})).empty());

  std::vector<UniFactor> lin = spectral_factors(poly_from({-2, 1}));
  REQUIRE(lin.size() == 1);
  CHECK(lin[0].poly == poly_from({-2, 1}));

  UniPoly mix = poly_from({1, -3, 1}) * poly_from({-1, 1}) *
                poly_from({-1, 1}) * poly_from({1, 1});
  std::vector<UniFactor> kept = spectral_factors(mix);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].poly == poly_from({1, -3, 1}));
  CHECK(kept[0].mult == 1);

  UniPoly golden = poly_from({0, 0, 0, 0, 1}) * poly_from({-1, 1}) *
                   poly_from({-1, -1, 1});
  std::vector<UniFactor> dyn = spectral_factors(golden);
  REQUIRE(dyn.size() == 1);
  CHECK(dyn[0].poly == poly_from({-1, -1, 1}));
}
