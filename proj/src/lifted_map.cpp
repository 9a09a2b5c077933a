#include "cremona/lifted_map.hpp"

#include <algorithm>

#include "cremona/errors.hpp"
#include "cremona/factor.hpp"

namespace cremona {
namespace {

void check_jet(const BiPoly& p, int jet_cap) {
  if (p.total_degree() > jet_cap)
    fail(ErrorCode::JetCapExceeded,
         "local germ degree " + std::to_string(p.total_degree()) +
             " exceeds the jet cap " + std::to_string(jet_cap));
}

int pivot3(const ProjPoint& p) {
  for (int i = 0; i < 3; ++i)
    if (p.c[i] != 0) return i;
  require_internal(false, "zero projective point");
  return -1;
}

// A local regular function written as a coprime fraction; the denominator
// is a unit at the origin.
struct Germ {
  BiPoly n, d;
};

Germ make_germ(BiPoly n, BiPoly d, int jet_cap) {
  require_internal(!d.is_zero(), "zero germ denominator");
  BiPoly g = bipoly_gcd(n, d);
  if (g.total_degree() > 0) {
    n = exact_div(n, g);
    d = exact_div(d, g);
  }
  check_jet(n, jet_cap);
  check_jet(d, jet_cap);
  require_internal(d.eval(0, 0) != 0, "germ denominator vanishes at center");
  return Germ{std::move(n), std::move(d)};
}

// Push a plane-valued germ (a coprime triple) down the codomain tower,
// splitting off one direction per blown-up center the image runs into.
SurfacePoint descend_codomain(const std::array<BiPoly, 3>& H,
                              const BlowupSurface& cod, int jet_cap,
                              const SurfacePoint& src) {
  Rat v0 = H[0].eval(0, 0), v1 = H[1].eval(0, 0), v2 = H[2].eval(0, 0);
  if (v0 == 0 && v1 == 0 && v2 == 0)
    fail(ErrorCode::IndeterminateAt,
         "lift has no continuous value at " + src.to_string());
  ProjPoint Q = make_point(v0, v1, v2);
  SurfacePoint cur = plane_point(Q);
  if (!cod.has_center(cur)) return cur;

  int k = pivot3(Q);
  int i1 = (k == 0) ? 1 : 0;
  int i2 = (k == 2) ? 1 : 2;
  Germ U = make_germ(H[i1] * Rat(Q.c[k]) - H[k] * Rat(Q.c[i1]),
                     H[k] * Rat(Q.c[k]), jet_cap);
  Germ V = make_germ(H[i2] * Rat(Q.c[k]) - H[k] * Rat(Q.c[i2]),
                     H[k] * Rat(Q.c[k]), jet_cap);

  while (cod.has_center(cur)) {
    // direction of approach of (U : V), both vanishing at the origin
    BiPoly an = U.n * V.d, bn = V.n * U.d;
    BiPoly g = bipoly_gcd(an, bn);
    if (g.total_degree() > 0) {
      an = exact_div(an, g);
      bn = exact_div(bn, g);
    }
    check_jet(an, jet_cap);
    check_jet(bn, jet_cap);
    Rat a0 = an.eval(0, 0), b0 = bn.eval(0, 0);
    if (a0 == 0 && b0 == 0)
      fail(ErrorCode::IndeterminateAt,
           "lift at " + src.to_string() + " has no direction of approach at " +
               cur.to_string());
    Direction dir = make_direction(a0, b0);
    Rat tau = direction_parameter(dir);
    if (dir.chart == 1) {
      Germ t = make_germ(V.n * U.d - U.n * V.d * tau, V.d * U.n, jet_cap);
      V = std::move(t);
    } else {
      Germ t = make_germ(U.n * V.d - V.n * U.d * tau, U.d * V.n, jet_cap);
      U = V;
      V = std::move(t);
    }
    cur.chain.push_back(dir);
  }
  return cur;
}

// The germ triple of the base map in the chart at p, common factors cleared.
std::array<BiPoly, 3> germ_triple(const PlaneMap& f,
                                  const std::array<BiPoly, 3>& chart,
                                  int jet_cap) {
  std::array<BiPoly, 3> G;
  for (int i = 0; i < 3; ++i) {
    G[i] = compose_form(f.components()[i], chart);
    require_internal(!G[i].is_zero(), "map component vanishes on a chart");
  }
  BiPoly g = bipoly_gcd(bipoly_gcd(G[0], G[1]), G[2]);
  if (g.total_degree() > 0)
    for (int i = 0; i < 3; ++i) G[i] = exact_div(G[i], g);
  for (int i = 0; i < 3; ++i) check_jet(G[i], jet_cap);
  return G;
}

}  // namespace

SurfacePoint evaluate_lifted(const LiftedMap& F, const SurfacePoint& p,
                             int jet_cap) {
  F.domain.validate_point(p);
  std::array<BiPoly, 3> G = germ_triple(F.base, local_chart(p), jet_cap);
  return descend_codomain(G, F.codomain, jet_cap, p);
}

namespace {

// Pointwise verdict used to filter enumerated candidates.
bool lift_indeterminate_at(const LiftedMap& F, const SurfacePoint& p,
                           int jet_cap, ResidualReport& residual) {
  try {
    evaluate_lifted(F, p, jet_cap);
    return false;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IndeterminateAt) return true;
    if (e.code() == ErrorCode::JetCapExceeded) {
      residual.add("jet cap reached while probing " + p.to_string());
      return false;
    }
    throw;
  }
}

Direction chart1_direction(const Rat& t) {
  return make_direction(Rat(den(t)), Rat(num(t)));
}

void push_chart1_roots(const UniPoly& g, const SurfacePoint& center,
                       std::vector<SurfacePoint>& cands,
                       ResidualReport& residual, const std::string& what) {
  if (g.is_zero() || g.degree() <= 0) return;
  std::vector<Rat> roots;
  try {
    roots = rational_roots(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegreeTooLarge) throw;
    residual.add(what + " over " + center.to_string() +
                 ": root enumeration incomplete");
    return;
  }
  for (const Rat& t0 : roots) {
    SurfacePoint cand = center;
    cand.chain.push_back(chart1_direction(t0));
    cands.push_back(cand);
  }
  if (static_cast<int>(roots.size()) < squarefree_part(g).degree())
    residual.add(what + " over " + center.to_string() +
                 ": irrational candidates remain");
}

// Plane centers of the tower, without repeats.
std::vector<ProjPoint> plane_center_bases(const BlowupSurface& X) {
  std::vector<ProjPoint> out;
  for (const SurfacePoint& c : X.centers())
    if (c.chain.empty()) out.push_back(c.base);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Candidates sent onto a blown-up codomain point Q with no coherent
// direction of approach, together with points feeding deeper centers.
void center_preimage_candidates(const LiftedMap& F, const ProjPoint& Q,
                                std::vector<SurfacePoint>& cands,
                                ResidualReport& residual) {
  const auto& comp = F.base.components();
  int k = pivot3(Q);
  int i1 = (k == 0) ? 1 : 0;
  int i2 = (k == 2) ? 1 : 2;
  HomogPoly3 A = comp[i1] * Rat(Q.c[k]) - comp[k] * Rat(Q.c[i1]);
  HomogPoly3 B = comp[i2] * Rat(Q.c[k]) - comp[k] * Rat(Q.c[i2]);
  require_internal(!A.is_zero() && !B.is_zero(),
                   "degenerate preimage equations");
  HomogPoly3 g = homog_gcd(A, B);
  HomogPoly3 A0 = A, B0 = B;
  if (g.degree() > 0) {
    A0 = exact_div(A, g);
    B0 = exact_div(B, g);
  }
  if (A0.degree() < 1 && B0.degree() < 1) {
    // the whole preimage curve approaches one point of the exceptional line
    SurfacePoint w = plane_point(Q);
    w.chain.push_back(make_direction(A0.eval(1, 1, 1), B0.eval(1, 1, 1)));
    if (F.codomain.has_center(w))
      residual.add("a curve through " + Q.to_string() +
                   " feeds the deeper center " + w.to_string() +
                   "; enumeration incomplete there");
    return;
  }

  std::vector<ProjPoint> pts;
  detail::pair_points(A0, B0, {}, pts, residual);
  for (const ProjPoint& p : pts) cands.push_back(plane_point(p));

  if (g.degree() <= 0) return;
  // points of a contracted curve whose direction feeds a deeper center
  for (const SurfacePoint& c : F.codomain.centers()) {
    if (c.chain.empty() || c.base != Q) continue;
    const Direction& d = c.chain[0];
    HomogPoly3 eq = A0 * Rat(d.b) - B0 * Rat(d.a);
    require_internal(!eq.is_zero(), "direction equation collapsed");
    for (const HomogFactor& fa : factor_homog(g).factors) {
      if (divides(fa.poly, eq)) {
        residual.add("contracted curve " + fa.poly.to_string() +
                     " feeds the deeper center " + c.to_string() +
                     " everywhere; enumeration incomplete there");
        continue;
      }
      std::vector<ProjPoint> on_curve;
      detail::curve_form_points(fa.poly, eq, on_curve, residual);
      for (const ProjPoint& p : on_curve) cands.push_back(plane_point(p));
    }
  }
}

// Candidates on the exceptional line of one domain center: parameters where
// the germ triple vanishes, where the image meets a blown-up codomain
// point, and the chart-2 point.
void exceptional_line_candidates(const LiftedMap& F, const SurfacePoint& W,
                                 int jet_cap,
                                 std::vector<SurfacePoint>& cands,
                                 ResidualReport& residual) {
  std::array<BiPoly, 3> chart = local_chart(W);
  std::array<BiPoly, 3> probe;
  for (int i = 0; i < 3; ++i)
    probe[i] = chart[i].subst(BiPoly::var_x(), BiPoly::var_x() * BiPoly::var_y());
  std::array<BiPoly, 3> H = germ_triple(F.base, probe, jet_cap);

  std::array<UniPoly, 3> R;
  for (int i = 0; i < 3; ++i) R[i] = H[i].eval_x(0);
  UniPoly gR = poly_gcd(poly_gcd(R[0], R[1]), R[2]);
  require_internal(!gR.is_zero(), "lift degenerates on an exceptional line");
  push_chart1_roots(gR, W, cands, residual, "indeterminacy probe");

  std::array<UniPoly, 3> Rp = R;
  if (gR.degree() > 0)
    for (int i = 0; i < 3; ++i)
      if (!Rp[i].is_zero()) Rp[i] = exact_div(Rp[i], gR);

  for (const ProjPoint& Q : plane_center_bases(F.codomain)) {
    int k = pivot3(Q);
    int i1 = (k == 0) ? 1 : 0;
    int i2 = (k == 2) ? 1 : 2;
    UniPoly E1 = Rp[i1] * Rat(Q.c[k]) - Rp[k] * Rat(Q.c[i1]);
    UniPoly E2 = Rp[i2] * Rat(Q.c[k]) - Rp[k] * Rat(Q.c[i2]);
    if (E1.is_zero() && E2.is_zero()) {
      // the whole line is contracted onto Q: probe the direction of
      // approach along the line one level deeper
      BiPoly A2 = H[i1] * Rat(Q.c[k]) - H[k] * Rat(Q.c[i1]);
      BiPoly B2 = H[i2] * Rat(Q.c[k]) - H[k] * Rat(Q.c[i2]);
      BiPoly g2 = bipoly_gcd(A2, B2);
      if (g2.total_degree() > 0) {
        A2 = exact_div(A2, g2);
        B2 = exact_div(B2, g2);
      }
      UniPoly a2 = A2.eval_x(0), b2 = B2.eval_x(0);
      require_internal(!(a2.is_zero() && b2.is_zero()),
                       "contracted-line direction pair vanished");
      push_chart1_roots(poly_gcd(a2, b2), W, cands, residual,
                        "direction probe");
      for (const SurfacePoint& c : F.codomain.centers()) {
        if (c.chain.empty() || c.base != Q) continue;
        const Direction& d = c.chain[0];
        UniPoly eq = a2 * Rat(d.b) - b2 * Rat(d.a);
        if (eq.is_zero()) {
          residual.add("exceptional line over " + W.to_string() +
                       " feeds the deeper center " + c.to_string() +
                       " everywhere; enumeration incomplete there");
          continue;
        }
        push_chart1_roots(eq, W, cands, residual, "deep center probe");
      }
    } else {
      push_chart1_roots(poly_gcd(E1, E2), W, cands, residual,
                        "blown-up image probe");
    }
  }

  SurfacePoint inf = W;
  inf.chain.push_back(make_direction(Int(0), Int(1)));
  cands.push_back(inf);
}

}  // namespace

LiftedIndeterminacy indeterminacy_lifted(const LiftedMap& F,
                                         const std::vector<SurfacePoint>& hints,
                                         int jet_cap) {
  LiftedIndeterminacy out;
  std::vector<SurfacePoint> cands;

  IndeterminacyResult base = indeterminacy_points(F.base);
  out.residual.merge(base.residual);
  for (const ProjPoint& p : base.points) cands.push_back(plane_point(p));

  for (const ProjPoint& Q : plane_center_bases(F.codomain))
    center_preimage_candidates(F, Q, cands, out.residual);

  for (const SurfacePoint& W : F.domain.centers())
    exceptional_line_candidates(F, W, jet_cap, cands, out.residual);

  for (const SurfacePoint& h : hints) {
    F.domain.validate_point(h);
    try {
      evaluate_lifted(F, h, jet_cap);
      fail(ErrorCode::HintNotIndeterminate,
           "hint " + h.to_string() + " is not indeterminate for the lift");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::IndeterminateAt) throw;
    }
    cands.push_back(h);
  }

  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const SurfacePoint& cand : cands) {
    if (F.domain.has_center(cand)) continue;
    if (lift_indeterminate_at(F, cand, jet_cap, out.residual))
      out.points.push_back(cand);
  }
  return out;
}

std::vector<SurfacePoint> sample_on_surface_curve(
    const BlowupSurface& X, const SurfaceCurve& C, int count,
    const std::vector<SurfacePoint>& avoid) {
  std::vector<SurfacePoint> out;
  auto usable = [&](const SurfacePoint& sp) {
    if (X.has_center(sp)) return false;
    return std::find(avoid.begin(), avoid.end(), sp) == avoid.end();
  };
  if (C.kind == SurfaceCurve::Kind::Proper) {
    std::vector<ProjPoint> skip;
    for (const SurfacePoint& c : X.centers())
      if (c.chain.empty()) skip.push_back(c.base);
    for (const SurfacePoint& a : avoid)
      if (a.chain.empty()) skip.push_back(a.base);
    int want = count + static_cast<int>(avoid.size());
    for (const ProjPoint& p : sample_points_on_curve(C.curve, want, skip)) {
      if (static_cast<int>(out.size()) == count) break;
      SurfacePoint sp = plane_point(p);
      if (usable(sp)) out.push_back(sp);
    }
  } else {
    const SurfacePoint& W = X.centers()[C.center];
    auto try_dir = [&](Direction d) {
      if (static_cast<int>(out.size()) == count) return;
      SurfacePoint sp = W;
      sp.chain.push_back(d);
      if (usable(sp)) out.push_back(sp);
    };
    try_dir(make_direction(Int(0), Int(1)));
    for (int t = 0; static_cast<int>(out.size()) < count && t <= 4 * count + 16;
         ++t) {
      try_dir(make_direction(Int(1), Int(t)));
      if (t > 0) try_dir(make_direction(Int(1), Int(-t)));
    }
  }
  if (static_cast<int>(out.size()) < count)
    fail(ErrorCode::SamplingFailed,
         "could not sample " + std::to_string(count) + " points on " +
             C.to_string());
  return out;
}

}  // namespace cremona
