#include "cremona/resolution.hpp"

#include <algorithm>
#include <string>

#include "cremona/errors.hpp"

namespace cremona {
namespace {

PlaneMap identity_map() {
  HomogPoly3 x, y, z;
  x.set(1, 0, 0, Rat(1));
  y.set(0, 1, 0, Rat(1));
  z.set(0, 0, 1, Rat(1));
  std::array<HomogPoly3, 3> c{x, y, z};
  return PlaneMap(c, c);
}

// The first graph projection as a lift: identity base viewed from the
// extended tower down to the original domain. A morphism by construction.
LiftedMap alpha_lift(const SmoothGraph& G) {
  return LiftedMap{identity_map(), G.sigma, G.alpha_base};
}

LiftedIndeterminacy certified_indeterminacy(const LiftedMap& F) {
  LiftedIndeterminacy ind = indeterminacy_lifted(F);
  if (!ind.residual.clean())
    fail(ErrorCode::ResidualIndeterminacy,
         "cannot certify the indeterminacy enumeration: " +
             ind.residual.notes.front());
  return ind;
}

// Common image point of a curve the lift contracts, read off a sample with
// a defined image.
SurfacePoint image_of_contracted(const LiftedMap& F, const SurfaceCurve& C) {
  std::vector<SurfacePoint> samples =
      sample_on_surface_curve(F.domain, C, 3, {});
  for (const SurfacePoint& p : samples) {
    try {
      return evaluate_lifted(F, p);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::IndeterminateAt) throw;
    }
  }
  fail(ErrorCode::InternalError,
       "no sample of a contracted curve had an image");
}

}  // namespace

SmoothGraph resolve(const LiftedMap& F, int round_cap) {
  BlowupSurface sigma = F.domain;
  int rounds = 0;
  for (;;) {
    LiftedIndeterminacy ind =
        certified_indeterminacy(LiftedMap{F.base, sigma, F.codomain});
    if (ind.points.empty()) break;
    if (rounds == round_cap)
      fail(ErrorCode::RoundCapExceeded,
           "indeterminacy persists after " + std::to_string(round_cap) +
               " rounds of blowups");
    ++rounds;
    for (const SurfacePoint& p : ind.points) sigma = blowup(sigma, p);
  }

  LiftedMap beta{F.base, sigma, F.codomain};
  int comp_alpha = sigma.depth() - F.domain.depth();
  int comp_beta = static_cast<int>(morphism_contracted(beta).size());
  // A birational morphism contracts one irreducible curve per rank it drops.
  if (F.base.has_inverse())
    require_internal(comp_beta == sigma.depth() - F.codomain.depth(),
                     "contracted curves fail to account for the rank drop");
  return SmoothGraph{sigma, F.domain, beta, comp_alpha, comp_beta};
}

int comp_of(const LiftedMap& F) {
  return static_cast<int>(exceptional_lifted(F).size());
}

UntangledCheck is_untangled(const LiftedMap& F) {
  std::vector<SurfaceCurve> exc = exceptional_lifted(F);
  LiftedIndeterminacy ind = certified_indeterminacy(F);
  // Scan both lists in display precedence (the reverse of container order)
  // so the reported pair is stable.
  for (auto c = exc.rbegin(); c != exc.rend(); ++c)
    for (auto p = ind.points.rbegin(); p != ind.points.rend(); ++p)
      if (multiplicity_at(F.domain, *c, *p) > 0)
        return UntangledCheck{false, std::make_pair(*c, *p)};
  return UntangledCheck{true, std::nullopt};
}

UntangledProperties untangled_properties(const LiftedMap& F) {
  UntangledProperties out;
  if (!is_untangled(F).untangled) return out;
  out.applicable = true;

  SmoothGraph G = resolve(F);
  std::vector<SurfaceCurve> eb = morphism_contracted(G.beta);
  std::vector<SurfaceCurve> ea;
  for (int i = G.alpha_base.depth(); i < G.sigma.depth(); ++i)
    ea.push_back(SurfaceCurve::exceptional(i));

  out.disjoint_exceptional = true;
  for (const SurfaceCurve& C : eb)
    if (std::find(ea.begin(), ea.end(), C) != ea.end())
      out.disjoint_exceptional = false;

  // Every curve beta contracts should survive the blowdown to the domain
  // tower (alpha is the identity away from the extra lines) and land exactly
  // on the contracted set of the lift, point images included.
  std::vector<SurfaceCurve> ef = exceptional_lifted(F);
  out.component_bijection = true;
  std::vector<SurfaceCurve> carried;
  for (const SurfaceCurve& C : eb) {
    if (C.kind == SurfaceCurve::Kind::Exceptional &&
        C.center >= G.alpha_base.depth())
      out.component_bijection = false;
    else
      carried.push_back(C);
  }
  std::sort(carried.begin(), carried.end());
  if (carried != ef) out.component_bijection = false;
  if (out.component_bijection)
    for (const SurfaceCurve& C : carried) {
      auto im = morphism_image(G.beta, C);
      if (!std::holds_alternative<SurfacePoint>(im) ||
          !(std::get<SurfacePoint>(im) == image_of_contracted(F, C)))
        out.component_bijection = false;
    }

  out.comp_matches = static_cast<int>(ef.size()) == G.comp_beta;
  LiftedMap inv{F.base.inverse_map(), F.codomain, F.domain};
  out.inverse_comp_matches = comp_of(inv) == G.comp_alpha;

  out.loci_disjoint = true;
  for (const SurfaceCurve& C : eb)
    for (const SurfaceCurve& L : ea) {
      if (C == L) {
        out.loci_disjoint = false;
        continue;
      }
      Int n = intersection(class_of_curve(G.sigma, C),
                           class_of_curve(G.sigma, L));
      if (n != 0) out.loci_disjoint = false;
    }
  return out;
}

LiftedMap graph_lift(const LiftedMap& F) {
  if (F.domain != F.codomain)
    fail(ErrorCode::SurfaceMismatch,
         "graph lift needs a self-map of one tower, got " +
             F.domain.to_string() + " and " + F.codomain.to_string());
  SmoothGraph G = resolve(F);
  LiftedMap out{F.base, G.sigma, G.sigma};
  require_internal(is_untangled(out).untangled, "graph lift came out tangled");
  return out;
}

UntangledDecomposition untangled_decomposition(const LiftedMap& F) {
  UntangledCheck ut = is_untangled(F);
  if (!ut.untangled)
    fail(ErrorCode::NotUntangled,
         "the lift contracts " + ut.witness->first.to_string() +
             " through the indeterminate point " +
             ut.witness->second.to_string());

  BlowupSurface plane;
  LiftedMap g{F.base, F.domain, plane};
  LiftedMap h{identity_map(), F.codomain, plane};
  require_internal(certified_indeterminacy(g).points.empty(),
                   "decomposition through the plane is unavailable");

  std::vector<SurfaceCurve> ef = exceptional_lifted(F);
  std::vector<SurfaceCurve> eg = morphism_contracted(g);
  require_internal(
      std::includes(eg.begin(), eg.end(), ef.begin(), ef.end()),
      "a contracted curve escapes the first projection");

  LiftedMap inv{F.base.inverse_map(), F.codomain, F.domain};
  std::vector<SurfaceCurve> efi = exceptional_lifted(inv);
  std::vector<SurfaceCurve> eh = morphism_contracted(h);
  require_internal(
      std::includes(eh.begin(), eh.end(), efi.begin(), efi.end()),
      "a curve contracted by the inverse escapes the blowdown");

  return UntangledDecomposition{g, h, eg == ef, eh == efi};
}

PullbackMatrix map_pullback(const LiftedMap& F) {
  SmoothGraph G = resolve(F);
  LatticeHom beta_pull = morphism_pullback(G.beta);
  LatticeHom alpha_push = morphism_pushforward(alpha_lift(G));
  return PullbackMatrix{F.codomain, F.domain,
                        mat_mul(alpha_push.m, beta_pull.m)};
}

LatticeHom pushforward(const LiftedMap& F) {
  SmoothGraph G = resolve(F);
  LatticeHom beta_push = morphism_pushforward(G.beta);
  LatticeHom alpha_pull = morphism_pullback(alpha_lift(G));
  return LatticeHom{F.domain, F.codomain, mat_mul(beta_push.m, alpha_pull.m)};
}

std::vector<FunctorialityCheck> check_functoriality(const LiftedMap& F,
                                                    int n) {
  if (F.domain != F.codomain)
    fail(ErrorCode::SurfaceMismatch,
         "comparing matrix powers needs one tower on both sides");
  PullbackMatrix fs = map_pullback(F);
  std::vector<FunctorialityCheck> out;
  PlaneMap power = F.base;
  for (int m = 1; m <= n; ++m) {
    if (m > 1) power = compose(F.base, power);
    PullbackMatrix pm = map_pullback(LiftedMap{power, F.domain, F.codomain});
    out.push_back(FunctorialityCheck{m, mat_pow(fs.m, m) == pm.m});
  }
  return out;
}

RatInterval dynamical_degree(const LiftedMap& F, const Rat& width) {
  UniPoly p = char_poly(map_pullback(F).m);
  std::optional<RootInterval> iv = isolate_largest_real_root(p, width);
  if (!iv)
    fail(ErrorCode::NoRealRoot, "the pullback spectrum has no real point");
  return RatInterval{iv->lo, iv->hi};
}

}  // namespace cremona
