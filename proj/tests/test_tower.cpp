#include <algorithm>

#include "cremona/lifted_map.hpp"
#include "cremona/parse.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

PlaneMap make_map(const std::string& a, const std::string& b,
                  const std::string& c) {
  return PlaneMap({parse_form(a), parse_form(b), parse_form(c)});
}

PlaneMap sigma_map() {
  std::array<HomogPoly3, 3> c{parse_form("y*z"), parse_form("x*z"),
                              parse_form("x*y")};
  return PlaneMap(c, c);
}

ProjPoint pt(long a, long b, long c) {
  return make_point(Int(a), Int(b), Int(c));
}

Direction dir(long a, long b) { return make_direction(Int(a), Int(b)); }

SurfacePoint near_pt(const ProjPoint& base, std::vector<Direction> chain) {
  return SurfacePoint{base, std::move(chain)};
}

// All three coordinate points blown up.
BlowupSurface coordinate_tower() {
  BlowupSurface X;
  X = blowup(X, plane_point(pt(1, 0, 0)));
  X = blowup(X, plane_point(pt(0, 1, 0)));
  X = blowup(X, plane_point(pt(0, 0, 1)));
  return X;
}

LiftedMap sigma_full() {
  BlowupSurface X = coordinate_tower();
  return LiftedMap{sigma_map(), X, X};
}

}  // namespace

TEST_CASE("directions normalize to primitive canonical slopes") {
  CHECK(dir(2, -4) == dir(1, -2));
  CHECK(dir(-3, 6).a == 1);
  CHECK(dir(-3, 6).b == -2);
  CHECK(dir(0, -7) == dir(0, 1));
  CHECK(dir(0, 5).chart == 2);
  CHECK(dir(4, 0).chart == 1);
  CHECK(direction_parameter(dir(2, 3)) == Rat(3) / Rat(2));
  CHECK(direction_parameter(dir(0, 9)) == 0);
  CHECK_THROWS_AS(dir(0, 0), Error);
}

TEST_CASE("blowup builds towers and rejects bad centers") {
  BlowupSurface plane;
  CHECK(plane.depth() == 0);
  CHECK(plane.picard_rank() == 1);

  BlowupSurface X = blowup(plane, plane_point(pt(1, 0, 0)));
  CHECK(X.depth() == 1);
  CHECK(X.picard_rank() == 2);

  // repeat center
  try {
    blowup(X, plane_point(pt(1, 0, 0)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCenter);
  }

  // infinitely near center on the fresh exceptional line
  BlowupSurface Y = blowup(X, near_pt(pt(1, 0, 0), {dir(1, 1)}));
  CHECK(Y.depth() == 2);

  // a chain level that was never blown up
  try {
    blowup(X, near_pt(pt(0, 1, 0), {dir(1, 1)}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCenter);
  }

  // points on a tower: centers are gone, their exceptional points exist
  CHECK_THROWS_AS(X.validate_point(plane_point(pt(1, 0, 0))), Error);
  X.validate_point(near_pt(pt(1, 0, 0), {dir(2, 5)}));
  X.validate_point(plane_point(pt(0, 1, 0)));
}

TEST_CASE("subtowers factor into ordered blowup steps") {
  BlowupSurface plane;
  BlowupSurface X = coordinate_tower();
  BlowupSurface Z = blowup(plane, plane_point(pt(1, 0, 0)));

  CHECK(is_subtower(plane, X));
  CHECK(is_subtower(Z, X));
  CHECK(is_subtower(X, X));
  CHECK(!is_subtower(X, Z));

  std::vector<SurfacePoint> steps = factor_morphism(X, Z);
  REQUIRE(steps.size() == 2);
  CHECK(steps[0] == plane_point(pt(0, 1, 0)));
  CHECK(steps[1] == plane_point(pt(0, 0, 1)));
  CHECK(factor_morphism(X, X).empty());

  BlowupSurface W = blowup(plane, plane_point(pt(1, 1, 1)));
  try {
    factor_morphism(X, W);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASubtower);
  }
}

TEST_CASE("local charts are centered at the point") {
  // plane point: chart evaluates back to the point at the origin
  std::array<BiPoly, 3> c = local_chart(plane_point(pt(2, -1, 3)));
  ProjPoint back = make_point(c[0].eval(0, 0), c[1].eval(0, 0), c[2].eval(0, 0));
  CHECK(back == pt(2, -1, 3));

  // one level up: the exceptional line is s = 0 and sweeps the slopes
  std::array<BiPoly, 3> e = local_chart(near_pt(pt(0, 0, 1), {dir(1, 1)}));
  CHECK(e[2] == BiPoly(Rat(1)));
  CHECK(e[0].eval(Rat(1), Rat(0)) == 1);  // u = s on the slope-1 branch
  CHECK(e[1].eval(Rat(1), Rat(0)) == 1);  // v = s (1 + t)
  CHECK(e[1].eval(Rat(1), Rat(2)) == 3);
}

TEST_CASE("lift evaluation agrees with the base map off the towers") {
  LiftedMap F = sigma_full();
  SurfacePoint p = plane_point(pt(1, 2, 3));
  CHECK(evaluate_lifted(F, p) == plane_point(pt(6, 3, 2)));

  // identity between identical towers fixes infinitely near points
  BlowupSurface X = blowup(BlowupSurface{}, plane_point(pt(0, 0, 1)));
  LiftedMap id{make_map("x", "y", "z"), X, X};
  SurfacePoint q = near_pt(pt(0, 0, 1), {dir(1, 5)});
  CHECK(evaluate_lifted(id, q) == q);
  CHECK(evaluate_lifted(id, plane_point(pt(1, 7, 1))) ==
        plane_point(pt(1, 7, 1)));
}

TEST_CASE("lift maps exceptional slopes onto the contracted line") {
  LiftedMap F = sigma_full();
  // slope t over (0:0:1) lands at (t:1:0) on the line z = 0
  CHECK(evaluate_lifted(F, near_pt(pt(0, 0, 1), {dir(1, 1)})) ==
        plane_point(pt(1, 1, 0)));
  CHECK(evaluate_lifted(F, near_pt(pt(0, 0, 1), {dir(2, 3)})) ==
        plane_point(pt(3, 2, 0)));
  CHECK(evaluate_lifted(F, near_pt(pt(0, 0, 1), {dir(1, -7)})) ==
        plane_point(pt(-7, 1, 0)));

  // the ends of the line are blown up, so those slopes descend one level
  CHECK(evaluate_lifted(F, near_pt(pt(0, 0, 1), {dir(1, 0)})) ==
        near_pt(pt(0, 1, 0), {dir(1, 0)}));
  CHECK(evaluate_lifted(F, near_pt(pt(0, 0, 1), {dir(0, 1)})) ==
        near_pt(pt(1, 0, 0), {dir(1, 0)}));
}

TEST_CASE("lift of the involution on the full tower is everywhere defined") {
  LiftedMap F = sigma_full();
  LiftedIndeterminacy I = indeterminacy_lifted(F);
  CHECK(I.points.empty());
  CHECK(I.residual.clean());

  // spot check: the lift squares to the identity on sample points
  for (const SurfacePoint& p :
       {plane_point(pt(2, 3, 5)), near_pt(pt(0, 0, 1), {dir(1, 4)}),
        near_pt(pt(1, 0, 0), {dir(1, 1)})}) {
    CHECK(evaluate_lifted(F, evaluate_lifted(F, p)) == p);
  }
}

TEST_CASE("partial towers leave the unresolved base points indeterminate") {
  BlowupSurface X = blowup(BlowupSurface{}, plane_point(pt(0, 0, 1)));
  LiftedMap F{sigma_map(), X, X};
  LiftedIndeterminacy I = indeterminacy_lifted(F);
  REQUIRE(I.points.size() == 2);
  CHECK(I.points[0] == plane_point(pt(0, 1, 0)));
  CHECK(I.points[1] == plane_point(pt(1, 0, 0)));
  CHECK(I.residual.clean());

  // on the exceptional line the lift is already defined
  CHECK(evaluate_lifted(F, near_pt(pt(0, 0, 1), {dir(1, 1)})) ==
        plane_point(pt(1, 1, 0)));
}

TEST_CASE("a blown-up codomain point pulls indeterminacy back") {
  // identity with only the codomain blown up: the lift cannot pick a
  // direction at the center
  BlowupSurface plane;
  BlowupSurface Y = blowup(plane, plane_point(pt(0, 0, 1)));
  LiftedMap F{make_map("x", "y", "z"), plane, Y};
  LiftedIndeterminacy I = indeterminacy_lifted(F);
  REQUIRE(I.points.size() == 1);
  CHECK(I.points[0] == plane_point(pt(0, 0, 1)));
  CHECK(I.residual.clean());
  CHECK_THROWS_AS(evaluate_lifted(F, plane_point(pt(0, 0, 1))), Error);
}

TEST_CASE("hints verify against the lift") {
  BlowupSurface X = blowup(BlowupSurface{}, plane_point(pt(0, 0, 1)));
  LiftedMap F{sigma_map(), X, X};
  LiftedIndeterminacy I =
      indeterminacy_lifted(F, {plane_point(pt(1, 0, 0))});
  CHECK(I.points.size() == 2);
  try {
    indeterminacy_lifted(F, {plane_point(pt(1, 1, 1))});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HintNotIndeterminate);
  }
}

TEST_CASE("irrational indeterminacy stays in the residual report") {
  BlowupSurface X = blowup(BlowupSurface{}, plane_point(pt(0, 0, 1)));
  LiftedMap F{make_map("x*z", "y*z", "x^2 - 2*y^2"), X, X};
  LiftedIndeterminacy I = indeterminacy_lifted(F);
  CHECK(I.points.empty());
  CHECK(!I.residual.clean());
}

TEST_CASE("tight jet caps abort instead of guessing") {
  LiftedMap F = sigma_full();
  CHECK_THROWS_AS(evaluate_lifted(F, plane_point(pt(1, 2, 3)), 1), Error);
  try {
    evaluate_lifted(F, near_pt(pt(0, 0, 1), {dir(1, 1)}), 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::JetCapExceeded);
  }
}

TEST_CASE("sampling on surface curves respects towers and exclusions") {
  BlowupSurface X = coordinate_tower();

  // proper transform of a line through two centers
  SurfaceCurve L = SurfaceCurve::proper(PlaneCurve(parse_form("z")));
  std::vector<SurfacePoint> s = sample_on_surface_curve(X, L, 5, {});
  CHECK(s.size() == 5);
  for (const SurfacePoint& p : s) {
    CHECK(p.chain.empty());
    CHECK(p.base.c[2] == 0);
    CHECK(!X.has_center(p));
  }

  // exceptional line of the third center
  SurfaceCurve E3 = SurfaceCurve::exceptional(2);
  std::vector<SurfacePoint> avoid = {near_pt(pt(0, 0, 1), {dir(1, 0)})};
  std::vector<SurfacePoint> e = sample_on_surface_curve(X, E3, 6, avoid);
  CHECK(e.size() == 6);
  for (const SurfacePoint& p : e) {
    CHECK(p.chain.size() == 1);
    CHECK(p.base == pt(0, 0, 1));
    CHECK(p != avoid[0]);
  }
}
