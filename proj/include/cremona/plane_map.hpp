#pragma once

#include <optional>
#include <vector>

#include "cremona/projective.hpp"

namespace cremona {

/// Rational self-map of P^2 given by three coprime forms of equal degree
/// d >= 1. Construction validates the invariants: no component is zero, all
/// are homogeneous of the same degree, the three share no form factor, and
/// a declared inverse composes to the identity on both sides. Coefficients
/// are scaled jointly to primitive integers with the grlex-leading
/// coefficient of the first component positive.
class PlaneMap {
 public:
  explicit PlaneMap(std::array<HomogPoly3, 3> comps);
  PlaneMap(std::array<HomogPoly3, 3> comps, std::array<HomogPoly3, 3> inverse);

  const std::array<HomogPoly3, 3>& components() const { return comps_; }
  int degree() const { return comps_[0].degree(); }

  bool has_inverse() const { return inv_.has_value(); }
  const std::array<HomogPoly3, 3>& inverse_components() const;
  /// The declared inverse as a map, with this map declared as its inverse.
  PlaneMap inverse_map() const;

  /// True when the map is exactly (x : y : z).
  bool is_identity() const;

  bool operator==(const PlaneMap& o) const { return comps_ == o.comps_; }

  std::string to_string() const;

 private:
  void validate_and_normalize();

  std::array<HomogPoly3, 3> comps_;
  std::optional<std::array<HomogPoly3, 3>> inv_;
};

/// Image of p, or nullopt when all components vanish at p.
std::optional<ProjPoint> image_point(const PlaneMap& f, const ProjPoint& p);

/// Image of p; throws IndeterminateAt when f is not defined at p.
ProjPoint evaluate(const PlaneMap& f, const ProjPoint& p);

struct IndeterminacyResult {
  std::vector<ProjPoint> points;  // sorted, deduplicated
  ResidualReport residual;
};

/// All rational points where the three components vanish simultaneously,
/// found by gcd splitting and resultant elimination. Hints are verified
/// exactly (HintNotIndeterminate on failure) and merged. The residual
/// report lists loci where irrational common zeros may remain.
IndeterminacyResult indeterminacy_points(const PlaneMap& f,
                                         const std::vector<ProjPoint>& hints = {});

struct ContractedCurve {
  PlaneCurve curve;
  ProjPoint image;
};

/// Curves the map blows down: irreducible factors of the Jacobian
/// determinant, each certified contracted through a sampled point plus an
/// exact divisibility identity, with the common image attached. Hints must
/// divide the Jacobian (HintNotExceptional otherwise). SamplingFailed when
/// some factor admits no usable rational sample point.
std::vector<ContractedCurve> exceptional_curves(const PlaneMap& f,
                                                const std::vector<PlaneCurve>& hints = {});

/// Common image of the generic point of C; SamplingFailed when no rational
/// sample with defined image exists or the curve is not contracted.
ProjPoint image_point_of_curve(const PlaneMap& f, const PlaneCurve& C);

/// g after f, with common factors of the composed components divided out.
/// When both maps declare inverses the composition declares f^-1 after g^-1.
PlaneMap compose(const PlaneMap& g, const PlaneMap& f);

/// Images of the contracted curves (the points whose preimage under f is a
/// curve). With a declared inverse the set is cross-checked against the
/// indeterminacy enumeration of the inverse; InverseMismatch when a clean
/// enumeration disagrees.
std::vector<ProjPoint> inverse_indeterminacy(const PlaneMap& f);

/// Re-verifies that the declared inverse composes with f to the identity on
/// both sides; NoInverseDeclared without one, InverseMismatch naming the
/// failing side otherwise.
void check_inverse(const PlaneMap& f);

/// Rational points on V(C) avoiding a finite set, sampled from pencils of
/// lines through a rational point (preferably on the curve, so lines and
/// conics enumerate exactly). SamplingFailed when `count` cannot be met.
std::vector<ProjPoint> sample_points_on_curve(const PlaneCurve& C, int count,
                                              const std::vector<ProjPoint>& avoid);

namespace detail {

/// Rational points killing the coprime forms A and B and every extra form;
/// residual notes mark loci where irrational solutions may remain.
void pair_points(const HomogPoly3& A, const HomogPoly3& B,
                 const std::vector<const HomogPoly3*>& extras,
                 std::vector<ProjPoint>& out, ResidualReport& residual);

/// Rational points common to V(C) and V(G) for C irreducible, C not a
/// factor of G.
void curve_form_points(const HomogPoly3& C, const HomogPoly3& G,
                       std::vector<ProjPoint>& out, ResidualReport& residual);

}  // namespace detail

}  // namespace cremona
