#include "cremona/stability.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

// A wandering orbit of a quadratic map roughly squares its coordinates
// every step, so exact iteration must give up on points past this size.
// Orbits that trip the budget land in the same undecided bucket as orbits
// that run past the length cap.
constexpr size_t kPointSizeBudget = 2048;

size_t point_size(const SurfacePoint& p) { return p.to_string().size(); }

LiftedIndeterminacy certified_indeterminacy(const LiftedMap& F,
                                            int jet_cap) {
  LiftedIndeterminacy ind = indeterminacy_lifted(F, {}, jet_cap);
  if (!ind.residual.notes.empty())
    fail(ErrorCode::ResidualIndeterminacy,
         "cannot certify the indeterminacy enumeration: " +
             ind.residual.notes.front());
  return ind;
}

std::set<SurfacePoint> indeterminacy_set(const LiftedMap& F, int jet_cap) {
  LiftedIndeterminacy ind = certified_indeterminacy(F, jet_cap);
  return std::set<SurfacePoint>(ind.points.begin(), ind.points.end());
}

// First curve component of the total transform of an indeterminate point.
// The exceptional fiber over such a point always covers at least one curve;
// coming up empty means the transform machinery is broken.
SurfaceCurve inverse_curve_at(const LiftedMap& F, const SurfacePoint& q,
                              int jet_cap) {
  for (const TransformPiece& piece : total_transform(F, q, jet_cap))
    if (const SurfaceCurve* c = std::get_if<SurfaceCurve>(&piece)) return *c;
  fail(ErrorCode::InternalError,
       "no curve component over a destabilising terminal point");
}

// Length first, then the serialized orbit, so selection never depends on
// container order.
std::pair<int, std::vector<std::string>> orbit_key(const DestabTriple& t) {
  std::vector<std::string> s;
  for (const SurfacePoint& p : t.orbit) s.push_back(p.to_string());
  return {t.length, s};
}

void require_self_map(const LiftedMap& F) {
  if (!(F.domain == F.codomain))
    fail(ErrorCode::SurfaceMismatch,
         "stabilization iterates a self-map of one tower, got " +
             F.domain.to_string() + " and " + F.codomain.to_string());
}

void finalize_report(StabilityReport& rep, const LiftedMap& F,
                     const Rat& root_width) {
  rep.pullback = map_pullback(F);
  rep.char_poly = char_poly(rep.pullback.m);
  rep.dyn_degree = dynamical_degree(F, root_width);
}

}  // namespace

DestabSearch find_destabilising(const LiftedMap& F, int orbit_cap,
                                int jet_cap) {
  require_internal(orbit_cap >= 1, "orbit budget must be positive");
  SmoothGraph G = resolve(F);
  std::set<SurfacePoint> iset = indeterminacy_set(F, jet_cap);
  DestabSearch out;
  for (const SurfaceCurve& C : exceptional_lifted(F)) {
    std::variant<SurfacePoint, SurfaceCurve> im = morphism_image(G.beta, C);
    const SurfacePoint* start = std::get_if<SurfacePoint>(&im);
    require_internal(start != nullptr,
                     "a contracted curve has a curve image through the graph");
    SurfacePoint p = *start;
    std::vector<SurfacePoint> orbit;
    std::set<SurfacePoint> seen;
    for (;;) {
      if (iset.count(p)) {
        orbit.push_back(p);
        int n = static_cast<int>(orbit.size());
        out.triples.push_back(
            DestabTriple{C, orbit, p, inverse_curve_at(F, p, jet_cap), n});
        break;
      }
      if (seen.count(p)) break;  // cycle: the orbit never reaches I
      orbit.push_back(p);
      seen.insert(p);
      if (static_cast<int>(orbit.size()) == orbit_cap) {
        out.capped.push_back(C);
        break;
      }
      p = evaluate_lifted(F, p, jet_cap);
      if (point_size(p) > kPointSizeBudget) {
        out.capped.push_back(C);
        break;
      }
    }
  }
  return out;
}

bool is_minimal(const DestabTriple& t, const LiftedMap& F, int jet_cap) {
  std::set<SurfacePoint> distinct(t.orbit.begin(), t.orbit.end());
  if (static_cast<int>(distinct.size()) != t.length) return false;
  std::set<SurfacePoint> forward = indeterminacy_set(F, jet_cap);
  for (int j = 0; j + 1 < t.length; ++j)
    if (forward.count(t.orbit[j])) return false;
  if (!F.base.has_inverse())
    fail(ErrorCode::NoInverseDeclared,
         "minimality is checked through the inverse indeterminacy");
  std::set<SurfacePoint> backward = indeterminacy_set(
      LiftedMap{F.base.inverse_map(), F.codomain, F.domain}, jet_cap);
  for (int j = 1; j < t.length; ++j)
    if (backward.count(t.orbit[j])) return false;
  return true;
}

StabilityReport stabilize_judicious(const LiftedMap& F, int orbit_cap,
                                    int round_cap, const Rat& root_width,
                                    int jet_cap) {
  require_self_map(F);
  if (!F.base.has_inverse())
    fail(ErrorCode::NoInverseDeclared,
         "judicious stabilization certifies orbit minimality through the "
         "inverse");
  StabilityReport rep;
  BlowupSurface X = F.domain;
  int prev_comp = -1;
  for (int round = 0;; ++round) {
    LiftedMap cur{F.base, X, X};
    int comp = resolve(cur).comp_alpha;
    if (prev_comp >= 0)
      require_internal(comp == prev_comp - 1,
                       "a round failed to drop the resolution count by one");
    DestabSearch search = find_destabilising(cur, orbit_cap, jet_cap);
    if (search.triples.empty()) {
      if (search.certified()) {
        rep.status = Stable{orbit_cap};
      } else {
        rep.status = Unknown{"orbit search still undecided at the cap for " +
                             search.capped.front().to_string()};
      }
      rep.comp_alpha = comp;
      rep.rounds_used = round;
      finalize_report(rep, cur, root_width);
      return rep;
    }
    if (round == round_cap)
      fail(ErrorCode::RoundCapExceeded,
           "destabilising orbits persist after " + std::to_string(round_cap) +
               " rounds of blowups");
    const DestabTriple* pick = &search.triples.front();
    for (const DestabTriple& t : search.triples)
      if (orbit_key(t) < orbit_key(*pick)) pick = &t;
    require_internal(is_minimal(*pick, cur, jet_cap),
                     "a shortest destabilising orbit is not minimal");
    for (const SurfacePoint& p : pick->orbit) {
      X = blowup(X, p);
      rep.blowup_log.push_back(p);
    }
    prev_comp = comp;
  }
}

StabilityReport stabilize_graph(const LiftedMap& F, int orbit_cap,
                                int round_cap, const Rat& root_width,
                                int jet_cap) {
  require_self_map(F);
  StabilityReport rep;
  LiftedMap cur = graph_lift(F);
  int prev_comp = -1;
  // A surviving length-n orbit promises a strict drop below baseline within
  // n further lifts.
  struct Promise {
    int deadline;
    int baseline;
  };
  std::vector<Promise> pending;
  for (int m = 1;; ++m) {
    int comp = comp_of(cur);
    if (prev_comp >= 0)
      require_internal(comp <= prev_comp,
                       "a graph step increased the contracted-curve count");
    std::erase_if(pending,
                  [&](const Promise& e) { return comp < e.baseline; });
    for (const Promise& e : pending)
      require_internal(m < e.deadline,
                       "no strict drop within the promised window");
    DestabSearch search = find_destabilising(cur, orbit_cap, jet_cap);
    if (search.triples.empty()) {
      if (search.certified()) {
        rep.status = Stable{orbit_cap};
      } else {
        rep.status = Unknown{"orbit search still undecided at the cap for " +
                             search.capped.front().to_string()};
      }
      rep.comp_alpha = resolve(cur).comp_alpha;
      rep.rounds_used = m;
      rep.blowup_log = factor_morphism(cur.domain, F.domain);
      finalize_report(rep, cur, root_width);
      return rep;
    }
    if (m == round_cap)
      fail(ErrorCode::RoundCapExceeded,
           "destabilising orbits persist after " + std::to_string(round_cap) +
               " graph lifts");
    int shortest = search.triples.front().length;
    for (const DestabTriple& t : search.triples)
      shortest = std::min(shortest, t.length);
    pending.push_back(Promise{m + shortest, comp});
    prev_comp = comp;
    cur = graph_lift(cur);
  }
}

namespace {

// The curve downstairs that the first graph projection maps a curve onto:
// identical designation for proper transforms and for exceptional lines of
// shared centers, nothing for the extra centers the projection contracts.
std::optional<SurfaceCurve> carry_down(const SurfaceCurve& c,
                                       const BlowupSurface& X) {
  if (c.kind == SurfaceCurve::Kind::Proper) return c;
  if (c.center < X.depth()) return c;
  return std::nullopt;
}

}  // namespace

IotaCheck iota_check(const LiftedMap& F, int orbit_cap, int jet_cap) {
  UntangledCheck u = is_untangled(F);
  if (!u.untangled)
    fail(ErrorCode::NotUntangled,
         "the orbit injection needs an untangled map; it contracts " +
             u.witness->first.to_string() + " through " +
             u.witness->second.to_string());
  LiftedMap hat = graph_lift(F);
  SmoothGraph G = resolve(F);
  IotaCheck out;
  DestabSearch up = find_destabilising(hat, orbit_cap, jet_cap);
  DestabSearch down = find_destabilising(F, orbit_cap, jet_cap);
  out.upstairs = up.triples;
  out.downstairs = down.triples;
  out.certified = up.certified() && down.certified();
  out.comp_up = comp_of(hat);
  out.comp_down = comp_of(F);
  out.well_defined = true;
  out.injective = true;
  std::set<std::string> images;
  for (const DestabTriple& t : up.triples) {
    std::optional<SurfaceCurve> c = carry_down(t.curve_c, F.domain);
    if (!c) {
      out.well_defined = false;
      continue;
    }
    std::variant<SurfacePoint, SurfaceCurve> dim =
        morphism_image(G.beta, t.curve_d);
    const SurfaceCurve* d = std::get_if<SurfaceCurve>(&dim);
    if (d == nullptr) {
      out.well_defined = false;
      continue;
    }
    const DestabTriple* target = nullptr;
    for (const DestabTriple& s : down.triples)
      if (s.curve_c == *c) target = &s;
    if (target == nullptr || target->length != t.length + 1) {
      out.well_defined = false;
      continue;
    }
    // The carried inverse curve must be one of the components over the
    // matched terminal point.
    bool component = false;
    for (const TransformPiece& piece :
         total_transform(F, target->terminal_q, jet_cap))
      if (const SurfaceCurve* pc = std::get_if<SurfaceCurve>(&piece))
        if (*pc == *d) component = true;
    if (!component) {
      out.well_defined = false;
      continue;
    }
    if (!images.insert(c->to_string()).second) out.injective = false;
  }
  out.surjective = true;
  for (const DestabTriple& s : down.triples)
    if (!images.count(s.curve_c.to_string())) out.surjective = false;
  out.comp_consistent = out.surjective ? out.comp_up == out.comp_down
                                       : out.comp_up < out.comp_down;
  return out;
}

namespace {

// All cyclotomic polynomials of degree at most d, built by exact division
// of x^n - 1 by the earlier ones.
std::vector<UniPoly> cyclotomics_up_to(int d) {
  std::vector<UniPoly> out;
  if (d < 1) return out;
  std::map<int, UniPoly> phi;
  // phi(n) >= sqrt(n/2), so degrees above d are impossible past 2 d^2 + 1.
  for (int n = 1; n <= 2 * d * d + 1; ++n) {
    std::vector<Rat> c(n + 1, Rat(0));
    c[0] = Rat(-1);
    c[n] = Rat(1);
    UniPoly rest(c);
    for (const auto& [k, p] : phi)
      if (n % k == 0) rest = exact_div(rest, p);
    phi[n] = rest;
    if (rest.degree() <= d) out.push_back(rest);
  }
  return out;
}

}  // namespace

std::vector<UniFactor> spectral_factors(const UniPoly& p) {
  UniFactorization f = factor_unipoly(p);
  std::vector<UniPoly> cyc = cyclotomics_up_to(p.degree());
  cyc.push_back(UniPoly::variable());
  std::vector<UniFactor> out;
  for (const UniFactor& fac : f.factors) {
    bool trivial = false;
    for (const UniPoly& c : cyc)
      if (fac.poly == c) trivial = true;
    if (!trivial) out.push_back(fac);
  }
  return out;
}

}  // namespace cremona
