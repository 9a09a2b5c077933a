#include "cremona/tower.hpp"

#include <algorithm>

#include "cremona/errors.hpp"

namespace cremona {

Direction make_direction(const Int& a, const Int& b) {
  std::vector<Int> v = primitive_vector(std::vector<Int>{a, b});
  Direction d;
  d.a = v[0];
  d.b = v[1];
  d.chart = (d.a != 0) ? 1 : 2;
  return d;
}

Direction make_direction(const Rat& a, const Rat& b) {
  std::vector<Int> v = primitive_vector(std::vector<Rat>{a, b});
  Direction d;
  d.a = v[0];
  d.b = v[1];
  d.chart = (d.a != 0) ? 1 : 2;
  return d;
}

bool Direction::operator<(const Direction& o) const {
  int c = cmp(a, o.a);
  if (c != 0) return c < 0;
  return cmp(b, o.b) < 0;
}

std::string Direction::to_string() const {
  return "(" + a.get_str() + ":" + b.get_str() + ")";
}

Rat direction_parameter(const Direction& d) {
  if (d.chart == 1) return Rat(d.b) / Rat(d.a);
  return Rat(d.a) / Rat(d.b);
}

bool SurfacePoint::operator<(const SurfacePoint& o) const {
  if (base != o.base) return base < o.base;
  return std::lexicographical_compare(chain.begin(), chain.end(),
                                      o.chain.begin(), o.chain.end());
}

std::string SurfacePoint::to_string() const {
  std::string s = base.to_string();
  for (const Direction& d : chain) s += "^" + d.to_string();
  return s;
}

SurfacePoint plane_point(const ProjPoint& p) { return SurfacePoint{p, {}}; }

bool BlowupSurface::has_center(const SurfacePoint& p) const {
  return std::find(centers_.begin(), centers_.end(), p) != centers_.end();
}

std::optional<int> BlowupSurface::center_index(const SurfacePoint& p) const {
  auto it = std::find(centers_.begin(), centers_.end(), p);
  if (it == centers_.end()) return std::nullopt;
  return static_cast<int>(it - centers_.begin());
}

void BlowupSurface::validate_point(const SurfacePoint& p) const {
  SurfacePoint prefix{p.base, {}};
  for (const Direction& d : p.chain) {
    if (!has_center(prefix))
      fail(ErrorCode::InvalidCenter,
           "point " + p.to_string() + " descends through " +
               prefix.to_string() + ", which is not blown up");
    prefix.chain.push_back(d);
  }
  if (has_center(p))
    fail(ErrorCode::InvalidCenter,
         "point " + p.to_string() + " has itself been blown up");
}

std::string BlowupSurface::to_string() const {
  std::string s = "plane";
  for (const SurfacePoint& c : centers_) s += " <- " + c.to_string();
  return s;
}

BlowupSurface blowup(const BlowupSurface& X, const SurfacePoint& p) {
  X.validate_point(p);
  BlowupSurface Y = X;
  Y.centers_.push_back(p);
  return Y;
}

bool is_subtower(const BlowupSurface& Z, const BlowupSurface& X) {
  if (Z.depth() > X.depth()) return false;
  return std::equal(Z.centers().begin(), Z.centers().end(),
                    X.centers().begin());
}

std::vector<SurfacePoint> factor_morphism(const BlowupSurface& X,
                                          const BlowupSurface& Z) {
  if (!is_subtower(Z, X))
    fail(ErrorCode::NotASubtower,
         "cannot factor " + X.to_string() + " through " + Z.to_string());
  return std::vector<SurfacePoint>(X.centers().begin() + Z.depth(),
                                   X.centers().end());
}

SurfaceCurve SurfaceCurve::exceptional(int index) {
  SurfaceCurve c;
  c.kind = Kind::Exceptional;
  c.center = index;
  return c;
}

SurfaceCurve SurfaceCurve::proper(PlaneCurve pc) {
  SurfaceCurve c;
  c.kind = Kind::Proper;
  c.curve = std::move(pc);
  return c;
}

bool SurfaceCurve::operator==(const SurfaceCurve& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Exceptional) return center == o.center;
  return curve == o.curve;
}

bool SurfaceCurve::operator<(const SurfaceCurve& o) const {
  if (kind != o.kind) return kind == Kind::Exceptional;
  if (kind == Kind::Exceptional) return center < o.center;
  return curve < o.curve;
}

std::string SurfaceCurve::to_string() const {
  if (kind == Kind::Exceptional) return "E" + std::to_string(center + 1);
  return "{" + curve.eq.to_string() + " = 0}";
}

std::array<BiPoly, 3> local_chart(const SurfacePoint& p) {
  int k = 0;
  while (k < 3 && p.base.c[k] == 0) ++k;
  require_internal(k < 3, "zero projective point");
  std::array<BiPoly, 3> tri;
  tri[k] = BiPoly(Rat(1));
  int slot = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == k) continue;
    BiPoly var = (slot == 0) ? BiPoly::var_x() : BiPoly::var_y();
    tri[i] = var + BiPoly(make_rat(p.base.c[i], p.base.c[k]));
    ++slot;
  }
  for (const Direction& d : p.chain) {
    BiPoly s = BiPoly::var_x(), t = BiPoly::var_y();
    BiPoly shifted = t + BiPoly(direction_parameter(d));
    BiPoly u = (d.chart == 1) ? s : s * shifted;
    BiPoly v = (d.chart == 1) ? s * shifted : s;
    for (int i = 0; i < 3; ++i) tri[i] = tri[i].subst(u, v);
  }
  return tri;
}

BiPoly compose_form(const HomogPoly3& F, const std::array<BiPoly, 3>& chart) {
  std::array<std::vector<BiPoly>, 3> pows;
  for (int i = 0; i < 3; ++i) pows[i].push_back(BiPoly(Rat(1)));
  auto power = [&](int i, int e) -> const BiPoly& {
    while (static_cast<int>(pows[i].size()) <= e)
      pows[i].push_back(pows[i].back() * chart[i]);
    return pows[i][e];
  };
  BiPoly acc;
  for (const auto& [k, c] : F.terms())
    acc = acc + power(0, k[0]) * power(1, k[1]) * power(2, k[2]) * c;
  return acc;
}

}  // namespace cremona
