#pragma once

#include <variant>
#include <vector>

#include "cremona/plane_map.hpp"
#include "cremona/tower.hpp"

namespace cremona {

inline constexpr int kJetCapDefault = 64;

/// A birational plane map viewed between two blowup towers. Nothing is
/// stored for the lift itself; every query goes through local charts of the
/// towers.
struct LiftedMap {
  PlaneMap base;
  BlowupSurface domain;
  BlowupSurface codomain;
};

/// Image of p under the lift. The local germ of the map is computed exactly
/// through the chart at p and descended into the codomain tower one blowup
/// at a time. IndeterminateAt is certified: after clearing common factors
/// the germ has no continuous value at p. JetCapExceeded bounds the degree
/// of intermediate germs and is inconclusive.
SurfacePoint evaluate_lifted(const LiftedMap& F, const SurfacePoint& p,
                             int jet_cap = kJetCapDefault);

struct LiftedIndeterminacy {
  std::vector<SurfacePoint> points;
  ResidualReport residual;
};

/// All rational indeterminate points of the lift: plane-level candidates,
/// points sent onto blown-up codomain centers with no well-defined direction
/// of approach, and infinitely near candidates probed symbolically along
/// each exceptional line of the domain tower. Hints must verify as
/// indeterminate (HintNotIndeterminate otherwise). Residual notes flag loci
/// where irrational candidates could not be excluded.
LiftedIndeterminacy indeterminacy_lifted(
    const LiftedMap& F, const std::vector<SurfacePoint>& hints = {},
    int jet_cap = kJetCapDefault);

/// Curves on the domain tower contracted by the lift: proper transforms of
/// contracted plane curves together with exceptional lines the lift sends to
/// points. Certified through divisor classes, cross-checked by sampling; a
/// disagreement is an internal error. Defined in transforms.cpp.
std::vector<SurfaceCurve> exceptional_lifted(const LiftedMap& F);

using TransformPiece = std::variant<SurfacePoint, SurfaceCurve>;

/// Total transform of a point: its image when the lift is defined at p,
/// otherwise the curves and points the exceptional fiber over p maps to.
/// Curve equations are recovered by exact interpolation through sampled
/// image points and verified on extra samples past the degree bound.
/// Defined in transforms.cpp.
std::vector<TransformPiece> total_transform(const LiftedMap& F,
                                            const SurfacePoint& p,
                                            int jet_cap = kJetCapDefault);

/// Points of the tower X on the given curve, avoiding a finite set.
std::vector<SurfacePoint> sample_on_surface_curve(
    const BlowupSurface& X, const SurfaceCurve& C, int count,
    const std::vector<SurfacePoint>& avoid);

}  // namespace cremona
