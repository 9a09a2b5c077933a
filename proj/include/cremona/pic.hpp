#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cremona/lifted_map.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

/// Divisor class on a blowup tower, written in the basis {H, E_1, ..., E_k}
/// of the line class and the total transforms of the exceptional lines. The
/// coefficient vector is (h, e_1, ..., e_k); the intersection form is
/// diagonal (1, -1, ..., -1) in this basis.
struct PicClass {
  BlowupSurface surface;
  std::vector<Int> c;

  bool operator==(const PicClass& o) const {
    return surface == o.surface && c == o.c;
  }
  bool operator!=(const PicClass& o) const { return !(*this == o); }

  std::string to_string() const;
};

PicClass zero_class(const BlowupSurface& X);
PicClass h_class(const BlowupSurface& X);
PicClass e_class(const BlowupSurface& X, int i);

PicClass add(const PicClass& a, const PicClass& b);
PicClass sub(const PicClass& a, const PicClass& b);
PicClass scale(const Int& k, const PicClass& a);

/// Intersection number of two classes on the same tower; SurfaceMismatch
/// when the towers differ.
Int intersection(const PicClass& a, const PicClass& b);

/// Multiplicity of (the strict transform of) C at the tower point p,
/// computed by transforming a local equation down the chain of p. Zero when
/// p does not lie on the transform.
int multiplicity_at(const BlowupSurface& X, const SurfaceCurve& C,
                    const SurfacePoint& p);

/// Class of an irreducible curve on X: a proper transform of a plane curve
/// of degree d gives d H - sum m_i E_i with m_i the multiplicity at the
/// i-th center; the irreducible exceptional line over center i gives E_i
/// minus the later classes whose centers lie on it.
PicClass class_of_curve(const BlowupSurface& X, const SurfaceCurve& C);

/// Dense integer matrix, row-major.
using IntMat = std::vector<std::vector<Int>>;

IntMat identity_mat(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_pow(const IntMat& a, int e);
/// Determinant by fraction-free elimination.
Int mat_det(const IntMat& a);
/// Characteristic polynomial det(x I - A), monic, by exact evaluation and
/// interpolation.
UniPoly char_poly(const IntMat& a);

/// Integer-linear map between the Picard groups of two towers. Column j
/// holds the image of the j-th source basis class (H first, then the E_i)
/// written in the target basis, so the matrix has 1 + depth(target) rows
/// and 1 + depth(source) columns.
struct LatticeHom {
  BlowupSurface source;
  BlowupSurface target;
  IntMat m;

  PicClass apply(const PicClass& a) const;

  bool operator==(const LatticeHom& o) const {
    return source == o.source && target == o.target && m == o.m;
  }
  bool operator!=(const LatticeHom& o) const { return !(*this == o); }
};

/// The pullback matrix of a map sends codomain classes to domain classes:
/// source is the codomain tower, target the domain tower, and the first
/// column is the pullback of H.
using PullbackMatrix = LatticeHom;

/// Image of an irreducible curve under an everywhere-defined lift: a point
/// when the curve is contracted, otherwise the image curve of the codomain
/// tower, recovered from exact samples by interpolation and verified on
/// spare samples past the fitting set (InterpolationUnverified when no
/// degree up to the cap verifies; the cap defaults to the base degree when
/// nonpositive). NotAMorphism when the lift has indeterminate points.
std::variant<SurfacePoint, SurfaceCurve> morphism_image(const LiftedMap& beta,
                                                        const SurfaceCurve& C,
                                                        int degree_cap = 0);

/// Direct image on divisor classes of an everywhere-defined lift: each basis
/// curve is pushed through morphism_image and classified on the codomain
/// tower. NotAMorphism when the lift has indeterminate points;
/// ResidualIndeterminacy when the indeterminacy enumeration cannot certify
/// emptiness.
LatticeHom morphism_pushforward(const LiftedMap& beta);

/// Irreducible curves of the domain tower that an everywhere-defined lift
/// contracts to points: exceptional lines and strict transforms of curves
/// the base map blows down, each decided by whether its class pushes to
/// zero and cross-checked by sampling (a disagreement is an internal
/// error). Sorted canonically.
std::vector<SurfaceCurve> morphism_contracted(const LiftedMap& beta);

/// Adjoint of morphism_pushforward under the intersection pairings of the
/// two towers.
LatticeHom morphism_pullback(const LiftedMap& beta);

/// Total-transform pullback f^* of a lifted map, computed through a
/// resolution: the graph projections give f^* = alpha_* after beta^*.
PullbackMatrix map_pullback(const LiftedMap& F);

/// Direct image f_* = beta_* after alpha^*, through the same resolution.
LatticeHom pushforward(const LiftedMap& F);

struct FunctorialityCheck {
  int m = 0;
  bool equal = false;
};

/// Compares (f^*)^m against (f^m)^* on the fixed towers for each m up to n.
/// The towers of F must coincide so that powers of the matrix make sense.
std::vector<FunctorialityCheck> check_functoriality(const LiftedMap& F, int n);

struct RatInterval {
  Rat lo, hi;

  bool operator==(const RatInterval& o) const {
    return lo == o.lo && hi == o.hi;
  }
};

/// Enclosure of the spectral radius of f^* with hi - lo at most width,
/// isolated from the exact characteristic polynomial. The value is the
/// dynamical degree only conditional on a stability certificate; output
/// layers attach that caveat.
RatInterval dynamical_degree(const LiftedMap& F, const Rat& width);

}  // namespace cremona
