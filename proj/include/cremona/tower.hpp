#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/bipoly.hpp"
#include "cremona/projective.hpp"

namespace cremona {

/// A point of the exceptional line created by one blowup, written as a
/// primitive slope (a : b). Chart 1 of the blowup covers slopes with a != 0
/// via (u, v) = (s, s t), chart 2 covers (0 : 1) via (u, v) = (s t, s).
struct Direction {
  Int a, b;
  int chart = 1;

  bool operator==(const Direction& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Direction& o) const { return !(*this == o); }
  bool operator<(const Direction& o) const;
  std::string to_string() const;
};

Direction make_direction(const Int& a, const Int& b);
Direction make_direction(const Rat& a, const Rat& b);

/// The slope expressed in the direction's own chart: b/a in chart 1,
/// a/b in chart 2.
Rat direction_parameter(const Direction& d);

/// A closed point of a blowup tower. An empty chain is an ordinary plane
/// point; each chain entry picks a point of the exceptional line one level
/// further up. Equality is structural: points over distinct base points are
/// never equal.
struct SurfacePoint {
  ProjPoint base;
  std::vector<Direction> chain;

  bool operator==(const SurfacePoint& o) const {
    return base == o.base && chain == o.chain;
  }
  bool operator!=(const SurfacePoint& o) const { return !(*this == o); }
  bool operator<(const SurfacePoint& o) const;
  std::string to_string() const;
};

SurfacePoint plane_point(const ProjPoint& p);

/// An iterated point blowup of the plane, recorded as the ordered list of
/// centers. A center may be infinitely near: its chain then descends through
/// exceptional lines created by earlier centers.
class BlowupSurface {
 public:
  BlowupSurface() = default;

  const std::vector<SurfacePoint>& centers() const { return centers_; }
  int depth() const { return static_cast<int>(centers_.size()); }
  int picard_rank() const { return 1 + depth(); }

  bool has_center(const SurfacePoint& p) const;
  std::optional<int> center_index(const SurfacePoint& p) const;

  /// A point lies on the tower when every proper prefix of its chain has
  /// been blown up and the point itself has not. InvalidCenter otherwise.
  void validate_point(const SurfacePoint& p) const;

  bool operator==(const BlowupSurface& o) const {
    return centers_ == o.centers_;
  }
  bool operator!=(const BlowupSurface& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  friend BlowupSurface blowup(const BlowupSurface& X, const SurfacePoint& p);
  std::vector<SurfacePoint> centers_;
};

BlowupSurface blowup(const BlowupSurface& X, const SurfacePoint& p);

/// Z is an initial segment of X's center list.
bool is_subtower(const BlowupSurface& Z, const BlowupSurface& X);

/// The ordered blowup steps leading from Z up to X. NotASubtower when X does
/// not extend Z.
std::vector<SurfacePoint> factor_morphism(const BlowupSurface& X,
                                          const BlowupSurface& Z);

/// A curve on a blowup tower: either the exceptional line of one center or
/// the proper transform of a plane curve.
struct SurfaceCurve {
  enum class Kind { Exceptional, Proper };

  Kind kind = Kind::Proper;
  int center = 0;
  PlaneCurve curve;

  static SurfaceCurve exceptional(int index);
  static SurfaceCurve proper(PlaneCurve c);

  bool operator==(const SurfaceCurve& o) const;
  bool operator!=(const SurfaceCurve& o) const { return !(*this == o); }
  bool operator<(const SurfaceCurve& o) const;
  std::string to_string() const;
};

/// The three plane coordinates as polynomials in local coordinates (u, v)
/// centered at p. For an empty chain this is the affine chart at the base
/// point (pivot coordinate set to 1); each chain entry composes one blowup
/// chart, centered so that p itself sits at (0, 0).
std::array<BiPoly, 3> local_chart(const SurfacePoint& p);

/// F with the chart triple substituted for the plane coordinates.
BiPoly compose_form(const HomogPoly3& F, const std::array<BiPoly, 3>& chart);

}  // namespace cremona
