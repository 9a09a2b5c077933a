#pragma once

#include <array>
#include <string>
#include <vector>

#include "cremona/homogpoly.hpp"

namespace cremona {

/// Point of P^2(Q) in primitive integer coordinates, first nonzero entry
/// positive. The representation is unique, so == and < are structural.
struct ProjPoint {
  std::array<Int, 3> c;

  bool operator==(const ProjPoint& o) const { return c == o.c; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const;

  std::string to_string() const;  // "(a : b : c)"
};

ProjPoint make_point(const Int& a, const Int& b, const Int& c);
ProjPoint make_point(const Rat& a, const Rat& b, const Rat& c);

/// Plane curve cut out by a canonical form. Producers keep the equation
/// canonical (primitive integer, grlex-first coefficient positive), so
/// structural comparison is equality of curves.
struct PlaneCurve {
  HomogPoly3 eq;

  explicit PlaneCurve(HomogPoly3 e);
  PlaneCurve() = default;

  int degree() const { return eq.degree(); }
  bool contains(const ProjPoint& p) const { return eq.eval(p.c) == 0; }

  bool operator==(const PlaneCurve& o) const { return eq == o.eq; }
  bool operator<(const PlaneCurve& o) const { return eq < o.eq; }

  std::string to_string() const { return eq.to_string(); }
};

/// Loci the exact enumeration could not resolve into rational points.
/// Consumers treat a non-clean report as "the answer may be incomplete".
struct ResidualReport {
  std::vector<std::string> notes;

  bool clean() const { return notes.empty(); }
  void add(std::string note) { notes.push_back(std::move(note)); }
  void merge(const ResidualReport& o) {
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

/// Rational projective roots of a nonzero binary form; irrational roots are
/// reported through the flag, not enumerated.
struct BinaryRoots {
  std::vector<std::pair<Int, Int>> roots;  // primitive (a : b)
  bool has_irrational = false;
  bool enumeration_capped = false;  // degree beyond the factorization cap
};
BinaryRoots binary_form_roots(const UniPoly& dehomog_at_y1, bool y_divides);

}  // namespace cremona
