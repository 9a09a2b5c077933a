#include "cremona/plane_map.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "cremona/errors.hpp"
#include "cremona/factor.hpp"

namespace cremona {
namespace {

int deg_z(const HomogPoly3& p) {
  int d = 0;
  for (const auto& [k, q] : p.terms()) d = std::max(d, k[2]);
  return d;
}

// F(a, b, t) as a polynomial in t.
UniPoly z_fiber(const HomogPoly3& F, const Int& a, const Int& b) {
  std::vector<Rat> c;
  for (const auto& [k, q] : F.terms()) {
    Rat v = q * Rat(int_pow(a, k[0])) * Rat(int_pow(b, k[1]));
    if (v == 0) continue;
    if (static_cast<int>(c.size()) <= k[2]) c.resize(k[2] + 1, Rat(0));
    c[k[2]] += v;
  }
  return UniPoly(c);
}

struct BinaryRes {
  UniPoly r1;  // the resultant form at y = 1
  int ymult;   // exponent of y split off the resultant form
};

// Resultant with respect to z of two coprime forms, a binary form in (x, y)
// represented as y^ymult * hom(r1). At least one input must involve z.
BinaryRes res_z_binary(const HomogPoly3& A, const HomogPoly3& B) {
  int ma = deg_z(A), mb = deg_z(B);
  require_internal(ma > 0 || mb > 0, "z-resultant of two z-free forms");
  UniPoly r = resultant_y(A.dehomogenize(1), B.dehomogenize(1));
  require_internal(!r.is_zero(), "vanishing resultant of coprime forms");
  int bound = ma * B.degree() + mb * A.degree() - ma * mb;
  int k = bound - r.degree();
  require_internal(k >= 0, "resultant degree exceeds its homogeneous bound");
  return {r, k};
}

// Removes the rational roots from a squarefree polynomial.
UniPoly strip_rational_roots(UniPoly sf,
                             const std::vector<std::pair<Int, Int>>& roots) {
  for (const auto& [a, b] : roots) {
    if (b == 0) continue;
    UniPoly lin(std::vector<Rat>{make_rat(-a, b), Rat(1)});
    if (divides(lin, sf)) sf = exact_div(sf, lin);
  }
  return sf;
}

void sort_unique(std::vector<ProjPoint>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool vanishes_at(const HomogPoly3& F, const std::array<Int, 3>& p) {
  return F.eval(p) == 0;
}

// Two independent integer points spanning the line V(lin).
std::pair<std::array<Int, 3>, std::array<Int, 3>> line_basis(
    const HomogPoly3& lin) {
  Int a = num(lin.coeff(1, 0, 0));
  Int b = num(lin.coeff(0, 1, 0));
  Int c = num(lin.coeff(0, 0, 1));
  if (a != 0) return {{-b, a, Int(0)}, {-c, Int(0), a}};
  if (b != 0) return {{Int(1), Int(0), Int(0)}, {Int(0), -c, b}};
  return {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}};
}

// G restricted to the line {s p + t q}, a binary form in (s, t).
BiPoly restrict_to_line(const HomogPoly3& G, const std::array<Int, 3>& p,
                        const std::array<Int, 3>& q) {
  std::array<BiPoly, 3> lin;
  for (int i = 0; i < 3; ++i)
    lin[i] = BiPoly::monomial(1, 0, Rat(p[i])) + BiPoly::monomial(0, 1, Rat(q[i]));
  std::array<std::vector<BiPoly>, 3> pows;
  for (int i = 0; i < 3; ++i) pows[i].push_back(BiPoly(Rat(1)));
  auto power = [&](int i, int e) -> const BiPoly& {
    while (static_cast<int>(pows[i].size()) <= e)
      pows[i].push_back(pows[i].back() * lin[i]);
    return pows[i][e];
  };
  BiPoly acc;
  for (const auto& [k, c] : G.terms())
    acc = acc + power(0, k[0]) * power(1, k[1]) * power(2, k[2]) * c;
  return acc;
}

void line_form_points(const HomogPoly3& lin, const HomogPoly3& G,
                      std::vector<ProjPoint>& out, ResidualReport& residual) {
  auto [p, q] = line_basis(lin);
  BiPoly r = restrict_to_line(G, p, q);
  require_internal(!r.is_zero(), "line lies inside the intersected form");
  UniPoly u = r.eval_y(1);
  bool t_divides = r.eval_y(0).is_zero();
  BinaryRoots roots = binary_form_roots(u, t_divides);
  for (const auto& [s0, t0] : roots.roots)
    out.push_back(make_point(Int(s0 * p[0] + t0 * q[0]),
                             Int(s0 * p[1] + t0 * q[1]),
                             Int(s0 * p[2] + t0 * q[2])));
  if (roots.has_irrational)
    residual.add("irrational intersections on the line " + lin.to_string());
}

}  // namespace

namespace detail {

// A and B must be coprime; residual notes mark loci where irrational points
// may remain.
void pair_points(const HomogPoly3& A, const HomogPoly3& B,
                 const std::vector<const HomogPoly3*>& extras,
                 std::vector<ProjPoint>& out, ResidualReport& residual) {
  auto origin_check = [&]() {
    std::array<Int, 3> o{0, 0, 1};
    if (!vanishes_at(A, o) || !vanishes_at(B, o)) return;
    for (const HomogPoly3* e : extras)
      if (!vanishes_at(*e, o)) return;
    out.push_back(make_point(Int(0), Int(0), Int(1)));
  };

  if (deg_z(A) == 0 && deg_z(B) == 0) {
    // coprime binary forms: only the common base point of the z-lines is left
    origin_check();
    return;
  }

  BinaryRes R = res_z_binary(A, B);
  BinaryRoots dirs = binary_form_roots(R.r1, R.ymult > 0);
  if (dirs.enumeration_capped)
    residual.add("direction enumeration incomplete on a resultant of degree " +
                 std::to_string(R.r1.degree() + R.ymult));

  for (const auto& [a, b] : dirs.roots) {
    UniPoly fa = z_fiber(A, a, b), fb = z_fiber(B, a, b);
    require_internal(!(fa.is_zero() && fb.is_zero()),
                     "coprime forms vanish on a common fiber line");
    UniPoly g = poly_gcd(fa, fb);
    for (const HomogPoly3* e : extras) {
      if (g.degree() <= 0) break;
      UniPoly fe = z_fiber(*e, a, b);
      if (fe.is_zero()) continue;  // this form contains the whole fiber line
      g = poly_gcd(g, fe);
    }
    if (g.degree() <= 0) continue;
    std::vector<Rat> zs;
    try {
      zs = rational_roots(g);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DegreeTooLarge) throw;
      residual.add("fiber root enumeration incomplete above (" + a.get_str() +
                   " : " + b.get_str() + ")");
      continue;
    }
    for (const Rat& z0 : zs) out.push_back(make_point(Rat(a), Rat(b), z0));
    if (static_cast<int>(zs.size()) < squarefree_part(g).degree())
      residual.add("irrational fiber roots above (" + a.get_str() + " : " +
                   b.get_str() + ")");
  }

  if (dirs.has_irrational && !dirs.enumeration_capped) {
    // A second elimination can rule out irrational directions: a common zero
    // of all the forms would have to kill that resultant as well.
    UniPoly leftover = strip_rational_roots(squarefree_part(R.r1), dirs.roots);
    bool ruled_out = leftover.degree() <= 0;
    for (const HomogPoly3* e : extras) {
      if (ruled_out) break;
      for (const HomogPoly3* p : {&A, &B}) {
        if (deg_z(*p) == 0 && deg_z(*e) == 0) continue;
        if (homog_gcd(*p, *e).degree() > 0) continue;
        BinaryRes S = res_z_binary(*p, *e);
        if (poly_gcd(leftover, S.r1).degree() <= 0) {
          ruled_out = true;
          break;
        }
      }
    }
    if (!ruled_out)
      residual.add("irrational direction candidates of degree " +
                   std::to_string(leftover.degree()) + " remain");
  }

  origin_check();
}

// C irreducible, C not a factor of G.
void curve_form_points(const HomogPoly3& C, const HomogPoly3& G,
                       std::vector<ProjPoint>& out, ResidualReport& residual) {
  require_internal(!divides(C, G), "common component in a curve intersection");
  if (C.degree() == 1) {
    line_form_points(C, G, out, residual);
    return;
  }
  pair_points(C, G, {}, out, residual);
}

}  // namespace detail

namespace {

void common_zeros3(const HomogPoly3& F0, const HomogPoly3& F1,
                   const HomogPoly3& F2, std::vector<ProjPoint>& out,
                   ResidualReport& residual) {
  HomogPoly3 g = homog_gcd(F0, F1);
  if (g.degree() > 0) {
    // zeros split: either on the shared divisor (meeting F2 in finitely many
    // points) or on the coprime cofactors
    for (const HomogFactor& fa : factor_homog(g).factors)
      detail::curve_form_points(fa.poly, F2, out, residual);
    HomogPoly3 A = exact_div(F0, g), B = exact_div(F1, g);
    if (A.degree() > 0 && B.degree() > 0)
      common_zeros3(A, B, F2, out, residual);
    return;
  }
  detail::pair_points(F0, F1, {&F2}, out, residual);
}

HomogPoly3 jacobian_det(const std::array<HomogPoly3, 3>& F) {
  std::array<std::array<HomogPoly3, 3>, 3> d;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d[i][j] = F[i].derivative(j);
  return d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) -
         d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
         d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
}

std::optional<ProjPoint> small_point_on(const HomogPoly3& C) {
  for (int h = 1; h <= 4; ++h)
    for (int a = -h; a <= h; ++a)
      for (int b = -h; b <= h; ++b)
        for (int c = -h; c <= h; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != h) continue;
          std::array<Int, 3> p{a, b, c};
          if (vanishes_at(C, p)) return make_point(p[0], p[1], p[2]);
        }
  return std::nullopt;
}

// Rational points on the curve, as many as found up to `want`.
std::vector<ProjPoint> sample_stream(const PlaneCurve& curve, size_t want,
                                     const std::vector<ProjPoint>& avoid) {
  const HomogPoly3& C = curve.eq;
  std::vector<ProjPoint> out;
  auto add = [&](const ProjPoint& p) {
    if (std::find(avoid.begin(), avoid.end(), p) != avoid.end()) return;
    if (std::find(out.begin(), out.end(), p) != out.end()) return;
    out.push_back(p);
  };
  std::vector<std::pair<Int, Int>> sweep{{Int(0), Int(1)}};
  for (int t = 0; t <= 60 && sweep.size() < 122; ++t) {
    sweep.push_back({Int(1), Int(t)});
    if (t > 0) sweep.push_back({Int(1), Int(-t)});
  }
  if (C.degree() == 1) {
    auto [p, q] = line_basis(C);
    for (const auto& [s, t] : sweep) {
      if (out.size() >= want) break;
      add(make_point(Int(s * p[0] + t * q[0]), Int(s * p[1] + t * q[1]),
                     Int(s * p[2] + t * q[2])));
    }
    return out;
  }
  // pencil of lines through a fixed point, preferably on the curve: then the
  // residual intersection of a conic is a single rational point per line
  std::array<Int, 3> ctr{0, 0, 1};
  if (!vanishes_at(C, ctr)) {
    if (auto sp = small_point_on(C)) {
      ctr = sp->c;
      add(*sp);
    }
  }
  int pivot = 0;
  while (ctr[pivot] == 0) ++pivot;
  std::array<Int, 3> e1{}, e2{};
  e1[(pivot + 1) % 3] = 1;
  e2[(pivot + 2) % 3] = 1;
  for (const auto& [a, b] : sweep) {
    if (out.size() >= want) break;
    std::array<Int, 3> m;
    for (int i = 0; i < 3; ++i) m[i] = a * e1[i] + b * e2[i];
    BiPoly r = restrict_to_line(C, ctr, m);
    if (r.is_zero()) continue;  // cannot happen for irreducible C of degree > 1
    if (r.eval_y(0).is_zero()) add(make_point(ctr[0], ctr[1], ctr[2]));
    UniPoly u = r.eval_y(1);
    if (u.degree() > kFactorDegreeCap || u.degree() <= 0) continue;
    for (const Rat& s0 : rational_roots(u))
      add(make_point(Rat(s0 * ctr[0] + m[0]), Rat(s0 * ctr[1] + m[1]),
                     Rat(s0 * ctr[2] + m[2])));
  }
  return out;
}

// One rational sample on C where f is defined, together with its image.
std::optional<std::pair<ProjPoint, ProjPoint>> sample_with_image(
    const PlaneMap& f, const PlaneCurve& C) {
  for (const ProjPoint& s : sample_stream(C, 24, {})) {
    auto img = image_point(f, s);
    if (img) return std::make_pair(s, *img);
  }
  return std::nullopt;
}

// Exact certificate that f maps all of V(C) to q: every 2x2 minor of the
// component matrix against q must vanish modulo C.
bool contraction_certificate(const PlaneMap& f, const HomogPoly3& C,
                             const ProjPoint& q) {
  const auto& F = f.components();
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    int i = pr[0], j = pr[1];
    HomogPoly3 minor = F[i] * Rat(q.c[j]) - F[j] * Rat(q.c[i]);
    if (minor.is_zero()) continue;
    if (!divides(C, minor)) return false;
  }
  return true;
}

}  // namespace

PlaneMap::PlaneMap(std::array<HomogPoly3, 3> comps) : comps_(std::move(comps)) {
  validate_and_normalize();
}

PlaneMap::PlaneMap(std::array<HomogPoly3, 3> comps,
                   std::array<HomogPoly3, 3> inverse)
    : comps_(std::move(comps)), inv_(std::move(inverse)) {
  validate_and_normalize();
}

namespace {

void normalize_triple(std::array<HomogPoly3, 3>& c, const char* what) {
  for (int i = 0; i < 3; ++i)
    if (c[i].is_zero())
      fail(ErrorCode::ZeroPolynomial,
           std::string(what) + " component " + std::to_string(i) + " is zero");
  int d = c[0].degree();
  for (int i = 1; i < 3; ++i)
    if (c[i].degree() != d)
      fail(ErrorCode::DegreeMismatch,
           std::string(what) + " components have different degrees");
  if (d < 1)
    fail(ErrorCode::DegreeMismatch,
         std::string(what) + " components must have degree at least 1");
  HomogPoly3 g = homog_gcd3(c[0], c[1], c[2]);
  if (g.degree() > 0)
    fail(ErrorCode::CommonFactor,
         std::string(what) + " components share the factor " + g.to_string());
  Int lcm_den(1), gcd_num(0);
  for (const HomogPoly3& p : c)
    for (const auto& [k, q] : p.terms()) {
      lcm_den = int_lcm(lcm_den, den(q));
      gcd_num = int_gcd(gcd_num, num(q));
    }
  Rat scale = make_rat(lcm_den, gcd_num);
  auto lead = grlex_leading(c[0]);
  if (sign(c[0].coeff(lead[0], lead[1], lead[2])) < 0) scale = -scale;
  if (scale != 1)
    for (HomogPoly3& p : c) p = p * scale;
}

bool composes_to_identity(const std::array<HomogPoly3, 3>& outer,
                          const std::array<HomogPoly3, 3>& inner) {
  try {
    return compose(PlaneMap(outer), PlaneMap(inner)).is_identity();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

void PlaneMap::validate_and_normalize() {
  normalize_triple(comps_, "map");
  if (!inv_) return;
  normalize_triple(*inv_, "inverse");
  if (!composes_to_identity(*inv_, comps_))
    fail(ErrorCode::InverseMismatch,
         "declared inverse does not undo the map on the left");
  if (!composes_to_identity(comps_, *inv_))
    fail(ErrorCode::InverseMismatch,
         "declared inverse does not undo the map on the right");
}

const std::array<HomogPoly3, 3>& PlaneMap::inverse_components() const {
  if (!inv_) fail(ErrorCode::NoInverseDeclared, "map declares no inverse");
  return *inv_;
}

PlaneMap PlaneMap::inverse_map() const {
  return PlaneMap(inverse_components(), comps_);
}

bool PlaneMap::is_identity() const {
  return comps_[0] == HomogPoly3::variable(0) &&
         comps_[1] == HomogPoly3::variable(1) &&
         comps_[2] == HomogPoly3::variable(2);
}

std::string PlaneMap::to_string() const {
  return "(" + comps_[0].to_string() + " : " + comps_[1].to_string() + " : " +
         comps_[2].to_string() + ")";
}

std::optional<ProjPoint> image_point(const PlaneMap& f, const ProjPoint& p) {
  const auto& F = f.components();
  Rat v0 = F[0].eval(p.c), v1 = F[1].eval(p.c), v2 = F[2].eval(p.c);
  if (v0 == 0 && v1 == 0 && v2 == 0) return std::nullopt;
  return make_point(v0, v1, v2);
}

ProjPoint evaluate(const PlaneMap& f, const ProjPoint& p) {
  auto img = image_point(f, p);
  if (!img)
    fail(ErrorCode::IndeterminateAt, "map undefined at " + p.to_string());
  return *img;
}

IndeterminacyResult indeterminacy_points(const PlaneMap& f,
                                         const std::vector<ProjPoint>& hints) {
  const auto& F = f.components();
  IndeterminacyResult r;
  common_zeros3(F[0], F[1], F[2], r.points, r.residual);
  for (const ProjPoint& h : hints) {
    if (F[0].eval(h.c) != 0 || F[1].eval(h.c) != 0 || F[2].eval(h.c) != 0)
      fail(ErrorCode::HintNotIndeterminate,
           "hint " + h.to_string() + " is not an indeterminacy point");
    r.points.push_back(h);
  }
  sort_unique(r.points);
  for (const ProjPoint& p : r.points)
    require_internal(F[0].eval(p.c) == 0 && F[1].eval(p.c) == 0 &&
                         F[2].eval(p.c) == 0,
                     "enumerated indeterminacy point fails verification");
  return r;
}

std::vector<ContractedCurve> exceptional_curves(
    const PlaneMap& f, const std::vector<PlaneCurve>& hints) {
  if (f.degree() == 1) {
    if (!hints.empty())
      fail(ErrorCode::HintNotExceptional,
           "a degree-1 map contracts no curves");
    return {};
  }
  HomogPoly3 jac = jacobian_det(f.components());
  if (jac.is_zero())
    fail(ErrorCode::ZeroPolynomial,
         "jacobian determinant vanishes identically; the map is not dominant");
  for (const PlaneCurve& h : hints)
    if (!divides(h.eq, jac))
      fail(ErrorCode::HintNotExceptional,
           "hint " + h.to_string() + " does not divide the jacobian");
  std::vector<ContractedCurve> out;
  for (const HomogFactor& fa : factor_homog(jac).factors) {
    PlaneCurve curve(fa.poly);
    auto sample = sample_with_image(f, curve);
    if (!sample)
      fail(ErrorCode::SamplingFailed,
           "no rational sample with defined image on " + curve.to_string());
    if (contraction_certificate(f, fa.poly, sample->second))
      out.push_back({curve, sample->second});
  }
  std::sort(out.begin(), out.end(),
            [](const ContractedCurve& a, const ContractedCurve& b) {
              return a.curve < b.curve;
            });
  return out;
}

ProjPoint image_point_of_curve(const PlaneMap& f, const PlaneCurve& C) {
  auto sample = sample_with_image(f, C);
  if (!sample)
    fail(ErrorCode::SamplingFailed,
         "no rational sample with defined image on " + C.to_string());
  if (!contraction_certificate(f, C.eq, sample->second))
    fail(ErrorCode::SamplingFailed,
         "sampled images disagree: the map does not contract " + C.to_string());
  return sample->second;
}

PlaneMap compose(const PlaneMap& g, const PlaneMap& f) {
  auto substituted = [](const std::array<HomogPoly3, 3>& outer,
                        const std::array<HomogPoly3, 3>& inner) {
    std::array<HomogPoly3, 3> h;
    for (int i = 0; i < 3; ++i) {
      h[i] = outer[i].subst(inner);
      if (h[i].is_zero())
        fail(ErrorCode::ZeroPolynomial,
             "composition has an identically vanishing component");
    }
    HomogPoly3 c = homog_gcd3(h[0], h[1], h[2]);
    if (c.degree() > 0)
      for (int i = 0; i < 3; ++i) h[i] = exact_div(h[i], c);
    return h;
  };
  std::array<HomogPoly3, 3> h = substituted(g.components(), f.components());
  if (f.has_inverse() && g.has_inverse())
    return PlaneMap(h, substituted(f.inverse_components(),
                                   g.inverse_components()));
  return PlaneMap(h);
}

std::vector<ProjPoint> inverse_indeterminacy(const PlaneMap& f) {
  std::vector<ProjPoint> pts;
  for (const ContractedCurve& c : exceptional_curves(f))
    pts.push_back(c.image);
  sort_unique(pts);
  if (f.has_inverse()) {
    IndeterminacyResult inv = indeterminacy_points(f.inverse_map());
    bool ok = inv.residual.clean()
                  ? inv.points == pts
                  : std::includes(pts.begin(), pts.end(), inv.points.begin(),
                                  inv.points.end());
    if (!ok)
      fail(ErrorCode::InverseMismatch,
           "contracted-curve images disagree with the indeterminacy of the "
           "declared inverse");
  }
  return pts;
}

void check_inverse(const PlaneMap& f) {
  const auto& inv = f.inverse_components();
  if (!composes_to_identity(inv, f.components()))
    fail(ErrorCode::InverseMismatch,
         "declared inverse does not undo the map on the left");
  if (!composes_to_identity(f.components(), inv))
    fail(ErrorCode::InverseMismatch,
         "declared inverse does not undo the map on the right");
}

std::vector<ProjPoint> sample_points_on_curve(
    const PlaneCurve& C, int count, const std::vector<ProjPoint>& avoid) {
  std::vector<ProjPoint> out = sample_stream(C, count, avoid);
  if (static_cast<int>(out.size()) < count)
    fail(ErrorCode::SamplingFailed,
         "found only " + std::to_string(out.size()) + " of " +
             std::to_string(count) + " rational points on " + C.to_string());
  return out;
}

}  // namespace cremona
