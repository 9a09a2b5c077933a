#pragma once

#include <optional>
#include <utility>

#include "cremona/lifted_map.hpp"
#include "cremona/pic.hpp"

namespace cremona {

inline constexpr int kRoundCapDefault = 64;

/// A lifted map resolved into two projections from one smooth tower: sigma
/// extends the domain tower (alpha is the chain of extra blowups) and beta
/// is the same base map viewed from sigma, certified everywhere defined.
/// comp_alpha counts the extra centers, comp_beta the curves beta contracts;
/// the two agree exactly when the base map is birational.
struct SmoothGraph {
  BlowupSurface sigma;
  BlowupSurface alpha_base;
  LiftedMap beta;
  int comp_alpha = 0;
  int comp_beta = 0;
};

/// Eliminate the indeterminacy of a lift by blowing up, each round, exactly
/// the points where the current lift is undefined, until none remain. The
/// enumeration must certify emptiness (ResidualIndeterminacy otherwise);
/// RoundCapExceeded after round_cap rounds of blowups.
SmoothGraph resolve(const LiftedMap& F, int round_cap = kRoundCapDefault);

/// Number of curves the lift contracts.
int comp_of(const LiftedMap& F);

/// Whether no contracted curve passes through an indeterminate point. When
/// one does, the first offending pair in canonical order is attached.
struct UntangledCheck {
  bool untangled = false;
  std::optional<std::pair<SurfaceCurve, SurfacePoint>> witness;
};
UntangledCheck is_untangled(const LiftedMap& F);

/// Structural consequences checked on the resolution of an untangled lift.
/// For a tangled lift only `applicable` is meaningful (false). The inverse
/// comparison needs a declared inverse.
struct UntangledProperties {
  bool applicable = false;
  /// No curve is contracted by both projections of the resolution.
  bool disjoint_exceptional = false;
  /// The curves beta contracts map bijectively, through the extra blowups,
  /// onto the curves the lift contracts, with matching image points.
  bool component_bijection = false;
  /// comp of the lift equals comp_beta.
  bool comp_matches = false;
  /// comp of the inverse lift equals comp_alpha.
  bool inverse_comp_matches = false;
  /// No curve contracted by beta meets an extra exceptional line in sigma,
  /// so the two contracted loci are disjoint point sets.
  bool loci_disjoint = false;
};
UntangledProperties untangled_properties(const LiftedMap& F);

/// The same base map lifted to act on the resolved tower of a self-map.
/// The result is always untangled; a failed check here contradicts the
/// structure of the resolution and raises InternalError.
LiftedMap graph_lift(const LiftedMap& F);

/// An untangled lift written as h^-1 after g with g, h everywhere-defined
/// lifts onto one lower surface: g carries the domain tower down, h is the
/// codomain blowdown. The contracted curves of the lift sit inside those of
/// g (equality exactly when the flags say so), and likewise for the inverse
/// inside h. NotUntangled when the lift is tangled.
struct UntangledDecomposition {
  LiftedMap g;
  LiftedMap h;
  bool exc_equal_g = false;
  bool inv_exc_equal_h = false;
};
UntangledDecomposition untangled_decomposition(const LiftedMap& F);

}  // namespace cremona
