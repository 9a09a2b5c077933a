#include <algorithm>

#include "cremona/errors.hpp"
#include "cremona/parse.hpp"
#include "cremona/pic.hpp"
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

LiftedMap blowdown_of(const BlowupSurface& X) {
  return LiftedMap{make_map("x", "y", "z"), X, BlowupSurface{}};
}

PicClass cls(const BlowupSurface& X, std::vector<long> v) {
  PicClass out = zero_class(X);
  for (size_t i = 0; i < v.size(); ++i) out.c[i] = Int(v[i]);
  return out;
}

SurfaceCurve proper_curve(const std::string& eq) {
  return SurfaceCurve::proper(PlaneCurve(parse_form(eq)));
}

}  // namespace

TEST_CASE("intersection form is diagonal with signature (1, -1, ..., -1)") {
  BlowupSurface X = coordinate_tower();
  CHECK(intersection(h_class(X), h_class(X)) == 1);
  for (int i = 0; i < 3; ++i) {
    CHECK(intersection(e_class(X, i), e_class(X, i)) == -1);
    CHECK(intersection(h_class(X), e_class(X, i)) == 0);
  }
  PicClass anticanonical_half = cls(X, {2, -1, -1, -1});
  CHECK(intersection(anticanonical_half, anticanonical_half) == 1);
  CHECK(intersection(cls(X, {3, -1, -2, 0}), cls(X, {1, -1, 0, 0})) == 2);

  BlowupSurface Y = blowup(BlowupSurface{}, plane_point(pt(0, 0, 1)));
  try {
    intersection(h_class(X), h_class(Y));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SurfaceMismatch);
  }
}

TEST_CASE("classes of plane curves carry strict-transform multiplicities") {
  BlowupSurface X = coordinate_tower();
  // A line through two of the centers and a conic through two.
  CHECK(class_of_curve(X, proper_curve("z")) == cls(X, {1, -1, -1, 0}));
  CHECK(class_of_curve(X, proper_curve("x*z - y^2")) ==
        cls(X, {2, -1, 0, -1}));
  CHECK(class_of_curve(X, proper_curve("x + y + z")) == cls(X, {1, 0, 0, 0}));
  for (int i = 0; i < 3; ++i)
    CHECK(class_of_curve(X, SurfaceCurve::exceptional(i)) == e_class(X, i));
}

TEST_CASE("infinitely near centers subtract along the chain") {
  BlowupSurface X;
  X = blowup(X, plane_point(pt(0, 0, 1)));
  X = blowup(X, SurfacePoint{pt(0, 0, 1), {dir(1, 0)}});

  // Smooth conic tangent to the blown-up direction passes both centers.
  CHECK(class_of_curve(X, proper_curve("y*z - x^2")) == cls(X, {2, -1, -1}));
  // The cusp of z*y^2 = x^3 has multiplicity two, then one.
  CHECK(class_of_curve(X, proper_curve("z*y^2 - x^3")) == cls(X, {3, -2, -1}));
  // The tangent line at the first center also passes the second.
  CHECK(class_of_curve(X, proper_curve("y")) == cls(X, {1, -1, -1}));
  // A line crossing the first center transversally misses the second.
  CHECK(class_of_curve(X, proper_curve("x")) == cls(X, {1, -1, 0}));
  // The first exceptional line now carries the second center.
  CHECK(class_of_curve(X, SurfaceCurve::exceptional(0)) == cls(X, {0, 1, -1}));
  CHECK(class_of_curve(X, SurfaceCurve::exceptional(1)) == cls(X, {0, 0, 1}));

  BlowupSurface X3 = blowup(X, SurfacePoint{pt(0, 0, 1), {dir(1, 0), dir(0, 1)}});
  CHECK(class_of_curve(X3, SurfaceCurve::exceptional(0)) ==
        cls(X3, {0, 1, -1, -1}));
  BlowupSurface X3b =
      blowup(X, SurfacePoint{pt(0, 0, 1), {dir(1, 0), dir(1, 5)}});
  CHECK(class_of_curve(X3b, SurfaceCurve::exceptional(0)) ==
        cls(X3b, {0, 1, -1, 0}));
}

TEST_CASE("multiplicity_at probes membership of deep points") {
  BlowupSurface X;
  X = blowup(X, plane_point(pt(0, 0, 1)));
  SurfaceCurve cusp = proper_curve("z*y^2 - x^3");
  CHECK(multiplicity_at(X, cusp, plane_point(pt(0, 0, 1))) == 2);
  CHECK(multiplicity_at(X, cusp, plane_point(pt(1, 1, 1))) == 1);
  CHECK(multiplicity_at(X, cusp, plane_point(pt(1, 1, 0))) == 0);
  CHECK(multiplicity_at(X, cusp, SurfacePoint{pt(0, 0, 1), {dir(1, 0)}}) == 1);
  CHECK(multiplicity_at(X, cusp, SurfacePoint{pt(0, 0, 1), {dir(1, 2)}}) == 0);
  CHECK(multiplicity_at(X, SurfaceCurve::exceptional(0),
                        SurfacePoint{pt(0, 0, 1), {dir(3, 7)}}) == 1);
  CHECK(multiplicity_at(X, SurfaceCurve::exceptional(0),
                        SurfacePoint{pt(0, 0, 1), {dir(1, 0), dir(0, 1)}}) ==
        1);
  CHECK(multiplicity_at(X, SurfaceCurve::exceptional(0),
                        SurfacePoint{pt(0, 0, 1), {dir(1, 0), dir(1, 5)}}) ==
        0);
  CHECK(multiplicity_at(X, SurfaceCurve::exceptional(0),
                        plane_point(pt(0, 0, 1))) == 0);
}

TEST_CASE("integer matrices multiply, power, and take determinants") {
  IntMat a{{Int(2), Int(1)}, {Int(1), Int(1)}};
  CHECK(mat_det(a) == 1);
  IntMat off{{Int(0), Int(2)}, {Int(3), Int(0)}};
  CHECK(mat_det(off) == -6);
  CHECK(mat_mul(a, identity_mat(2)) == a);
  CHECK(mat_pow(a, 0) == identity_mat(2));
  IntMat sq = mat_pow(a, 2);
  IntMat sq_expected{{Int(5), Int(3)}, {Int(3), Int(2)}};
  CHECK(sq == sq_expected);
  // Singular matrix with a zero leading pivot.
  IntMat s{{Int(0), Int(1), Int(1)},
           {Int(0), Int(2), Int(2)},
           {Int(1), Int(0), Int(0)}};
  CHECK(mat_det(s) == 0);
}

TEST_CASE("characteristic polynomials come out exact and monic") {
  UniPoly x = UniPoly::variable();
  IntMat swap2{{Int(0), Int(1)}, {Int(1), Int(0)}};
  CHECK(char_poly(swap2) == x * x - UniPoly(Rat(1)));
  CHECK(char_poly(identity_mat(3)) ==
        (x - UniPoly(Rat(1))) * (x - UniPoly(Rat(1))) * (x - UniPoly(Rat(1))));
  IntMat a{{Int(2), Int(1)}, {Int(1), Int(1)}};
  CHECK(char_poly(a) == x * x - x * Rat(3) + UniPoly(Rat(1)));
}

TEST_CASE("blowdown pushes exceptional classes to zero") {
  BlowupSurface X = coordinate_tower();
  LiftedMap down = blowdown_of(X);
  LatticeHom push = morphism_pushforward(down);
  CHECK(push.source == X);
  CHECK(push.target == BlowupSurface{});
  IntMat push_expected{{Int(1), Int(0), Int(0), Int(0)}};
  CHECK(push.m == push_expected);
  CHECK(push.apply(h_class(X)) == h_class(BlowupSurface{}));
  CHECK(push.apply(e_class(X, 1)) == zero_class(BlowupSurface{}));

  LatticeHom pull = morphism_pullback(down);
  IntMat pull_expected{{Int(1)}, {Int(0)}, {Int(0)}, {Int(0)}};
  CHECK(pull.m == pull_expected);
  CHECK(pull.apply(h_class(BlowupSurface{})) == h_class(X));
}

TEST_CASE("morphism_image tracks curves through the standard involution") {
  LiftedMap f = sigma_full();
  auto im = morphism_image(f, SurfaceCurve::exceptional(0));
  REQUIRE(std::holds_alternative<SurfaceCurve>(im));
  CHECK(std::get<SurfaceCurve>(im) == proper_curve("x"));

  auto fixed = morphism_image(f, proper_curve("x - y"));
  REQUIRE(std::holds_alternative<SurfaceCurve>(fixed));
  CHECK(std::get<SurfaceCurve>(fixed) == proper_curve("x - y"));

  LiftedMap down = blowdown_of(coordinate_tower());
  auto contracted = morphism_image(down, SurfaceCurve::exceptional(2));
  REQUIRE(std::holds_alternative<SurfacePoint>(contracted));
  CHECK(std::get<SurfacePoint>(contracted) == plane_point(pt(0, 0, 1)));
}

TEST_CASE("the involution's lattice action is the del Pezzo symmetry") {
  LiftedMap f = sigma_full();
  LatticeHom push = morphism_pushforward(f);
  IntMat expected{{Int(2), Int(1), Int(1), Int(1)},
                  {Int(-1), Int(0), Int(-1), Int(-1)},
                  {Int(-1), Int(-1), Int(0), Int(-1)},
                  {Int(-1), Int(-1), Int(-1), Int(0)}};
  CHECK(push.m == expected);

  LatticeHom pull = morphism_pullback(f);
  CHECK(pull.m == expected);
  CHECK(mat_det(pull.m) == -1);
  CHECK(mat_mul(push.m, pull.m) == identity_mat(4));
  CHECK(mat_pow(pull.m, 2) == identity_mat(4));

  UniPoly x = UniPoly::variable();
  UniPoly xm1 = x - UniPoly(Rat(1));
  UniPoly expected_char = xm1 * xm1 * xm1 * (x + UniPoly(Rat(1)));
  CHECK(char_poly(pull.m) == expected_char);
  auto top = isolate_largest_real_root(char_poly(pull.m), Rat(1) / Rat(1000));
  REQUIRE(top.has_value());
  CHECK(top->exact());
  CHECK(top->lo == 1);
}

TEST_CASE("pushforward and pullback are adjoint for the intersection form") {
  LiftedMap f = sigma_full();
  LatticeHom push = morphism_pushforward(f);
  LatticeHom pull = morphism_pullback(f);
  BlowupSurface X = coordinate_tower();
  std::vector<PicClass> basis{h_class(X), e_class(X, 0), e_class(X, 1),
                              e_class(X, 2)};
  for (const PicClass& a : basis)
    for (const PicClass& b : basis)
      CHECK(intersection(push.apply(a), b) ==
            intersection(a, pull.apply(b)));
}

TEST_CASE("pushforward of a map with indeterminate points is refused") {
  LiftedMap bare{sigma_map(), BlowupSurface{}, BlowupSurface{}};
  try {
    morphism_pushforward(bare);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAMorphism);
  }
}

TEST_CASE("resolving the domain alone already gives a morphism to the plane") {
  BlowupSurface X = coordinate_tower();
  LatticeHom push =
      morphism_pushforward(LiftedMap{sigma_map(), X, BlowupSurface{}});
  IntMat push_expected{{Int(2), Int(1), Int(1), Int(1)}};
  CHECK(push.m == push_expected);
  LatticeHom pull =
      morphism_pullback(LiftedMap{sigma_map(), X, BlowupSurface{}});
  IntMat pull_expected{{Int(2)}, {Int(-1)}, {Int(-1)}, {Int(-1)}};
  CHECK(pull.m == pull_expected);
}

TEST_CASE("lattice maps reject classes from the wrong surface") {
  LiftedMap down = blowdown_of(coordinate_tower());
  LatticeHom push = morphism_pushforward(down);
  CHECK_THROWS_AS(push.apply(h_class(BlowupSurface{})), Error);
}
