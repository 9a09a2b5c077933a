#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cremona/factor.hpp"
#include "cremona/resolution.hpp"

namespace cremona {

inline constexpr int kOrbitCapDefault = 32;

/// Default enclosure width for spectral-radius intervals: 10^-12.
inline const Rat kRootWidthDefault = make_rat(Int(1), Int(1000000000000L));

/// A contracted curve whose image orbit reaches an indeterminate point.
/// orbit holds p_1 = image of curve_c through p_n = terminal_q; curve_d is
/// an irreducible component of the total transform of terminal_q.
struct DestabTriple {
  SurfaceCurve curve_c;
  std::vector<SurfacePoint> orbit;
  SurfacePoint terminal_q;
  SurfaceCurve curve_d;
  int length = 0;
};

struct DestabSearch {
  std::vector<DestabTriple> triples;
  std::vector<SurfaceCurve> capped;  // orbits still undecided at the cap

  bool certified() const { return capped.empty(); }
};

/// Forward orbit search from the image point of every contracted curve,
/// with exact point equality throughout. An orbit that reaches an
/// indeterminate point yields a triple; a revisited point certifies a cycle
/// that never gets there; running past the length cap, or past the exact
/// arithmetic size budget on a wandering orbit, leaves the curve in capped.
DestabSearch find_destabilising(const LiftedMap& F,
                                int orbit_cap = kOrbitCapDefault,
                                int jet_cap = kJetCapDefault);

/// Orbit points pairwise distinct, all but the last defined under the map,
/// all but the first defined under the inverse.
bool is_minimal(const DestabTriple& t, const LiftedMap& F,
                int jet_cap = kJetCapDefault);

struct Stable {
  int orbit_cap = 0;  // certification is relative to this search budget
};
struct Unstable {
  DestabTriple witness;
};
struct Unknown {
  std::string reason;
};
using StabilityStatus = std::variant<Stable, Unstable, Unknown>;

struct StabilityReport {
  StabilityStatus status;
  int comp_alpha = 0;
  int rounds_used = 0;
  std::vector<SurfacePoint> blowup_log;
  PullbackMatrix pullback;
  UniPoly char_poly;
  RatInterval dyn_degree;
};

/// Repeatedly blow up a shortest destabilising orbit (ties broken on the
/// serialized orbit) until no orbit survives the search. Each round must
/// drop the resolution count by exactly one and the selected orbit must be
/// minimal; either failure is an internal error. RoundCapExceeded when
/// orbits persist past round_cap; an inconclusive search at the end turns
/// the status into Unknown instead of Stable.
StabilityReport stabilize_judicious(const LiftedMap& F,
                                    int orbit_cap = kOrbitCapDefault,
                                    int round_cap = kRoundCapDefault,
                                    const Rat& root_width = kRootWidthDefault,
                                    int jet_cap = kJetCapDefault);

/// Replace the map by its lift to the resolved graph until no destabilising
/// orbit survives the search. The contracted-curve count must never grow,
/// and must drop strictly within n rounds of any surviving length-n orbit;
/// either failure is an internal error.
StabilityReport stabilize_graph(const LiftedMap& F,
                                int orbit_cap = kOrbitCapDefault,
                                int round_cap = kRoundCapDefault,
                                const Rat& root_width = kRootWidthDefault,
                                int jet_cap = kJetCapDefault);

/// Comparison of the destabilising triples of a map against those of its
/// lift to the resolved graph: every triple upstairs must map to one
/// downstairs with the orbit one step longer, injectively; the assignment
/// is onto exactly when the two contracted-curve counts agree, and
/// otherwise the upstairs count is strictly smaller.
struct IotaCheck {
  std::vector<DestabTriple> upstairs;
  std::vector<DestabTriple> downstairs;
  bool certified = false;  // neither orbit search hit the cap
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  bool comp_consistent = false;
  int comp_up = 0;
  int comp_down = 0;
};

/// NotUntangled unless the map passes is_untangled.
IotaCheck iota_check(const LiftedMap& F, int orbit_cap = kOrbitCapDefault,
                     int jet_cap = kJetCapDefault);

/// Irreducible factors of p with a root outside the closed unit disk, with
/// multiplicities, in primitive integer form. By Kronecker's theorem this
/// drops exactly the cyclotomic factors and the power of x, which is the
/// part of a stabilized characteristic polynomial that depends on the
/// chosen model; what survives is shared by every stable model.
std::vector<UniFactor> spectral_factors(const UniPoly& p);

}  // namespace cremona
