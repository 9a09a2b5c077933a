#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cremona/bipoly.hpp"

namespace cremona {

/// Homogeneous polynomial in (x, y, z) over Q. Construction via monomials
/// does not force homogeneity; degree() rejects non-homogeneous content, and
/// the public entry points that must have forms validate explicitly.
class HomogPoly3 {
public:
  using Key = std::array<int, 3>;

  HomogPoly3() = default;
  explicit HomogPoly3(Rat constant);

  static HomogPoly3 variable(int i);  // 0 -> x, 1 -> y, 2 -> z
  static HomogPoly3 monomial(int a, int b, int c, Rat coeff);

  bool is_zero() const { return c_.empty(); }
  bool is_homogeneous() const;
  /// Common total degree; fails on zero or non-homogeneous input.
  int degree() const;
  int max_term_degree() const;  // -1 for zero

  const std::map<Key, Rat>& terms() const { return c_; }
  Rat coeff(int a, int b, int c) const;
  void set(int a, int b, int c, Rat coeff);

  HomogPoly3 operator-() const;
  HomogPoly3 operator+(const HomogPoly3& o) const;
  HomogPoly3 operator-(const HomogPoly3& o) const;
  HomogPoly3 operator*(const HomogPoly3& o) const;
  HomogPoly3 operator*(const Rat& s) const;
  bool operator==(const HomogPoly3& o) const { return c_ == o.c_; }
  bool operator<(const HomogPoly3& o) const { return c_ < o.c_; }

  HomogPoly3 pow(int e) const;
  HomogPoly3 derivative(int var) const;

  Rat eval(const Rat& x, const Rat& y, const Rat& z) const;
  Rat eval(const std::array<Int, 3>& p) const;

  /// Substitutes three polynomials; the result is homogeneous when all three
  /// share a degree.
  HomogPoly3 subst(const std::array<HomogPoly3, 3>& f) const;

  /// Sets variable `chart` to 1. The two survivors keep increasing index
  /// order: chart 0 -> (y, z), chart 1 -> (x, z), chart 2 -> (x, y).
  BiPoly dehomogenize(int chart) const;

  std::string to_string() const;

private:
  std::map<Key, Rat> c_;
};

/// Inverse of dehomogenize: multiplies each term by the chart variable to
/// reach target_degree. Fails when target_degree is too small.
HomogPoly3 homogenize(const BiPoly& p, int chart, int target_degree);

/// Primitive integer coefficients with the grlex-first coefficient positive.
HomogPoly3 canonical_homog(const HomogPoly3& p);

/// Grlex-descending leading term key; fails on zero.
HomogPoly3::Key grlex_leading(const HomogPoly3& p);

/// gcd up to units, in canonical form.
HomogPoly3 homog_gcd(const HomogPoly3& a, const HomogPoly3& b);
HomogPoly3 homog_gcd3(const HomogPoly3& a, const HomogPoly3& b, const HomogPoly3& c);

std::optional<HomogPoly3> try_exact_div(const HomogPoly3& a, const HomogPoly3& b);
HomogPoly3 exact_div(const HomogPoly3& a, const HomogPoly3& b);
bool divides(const HomogPoly3& d, const HomogPoly3& a);

struct HomogFactor {
  HomogPoly3 poly;  // canonical irreducible form
  int mult = 1;
};

struct HomogFactorization {
  Rat unit;
  std::vector<HomogFactor> factors;
};

/// Irreducible factorization of a homogeneous polynomial over Q: monomial
/// content first, then the dehomogenized bivariate factorization.
HomogFactorization factor_homog(const HomogPoly3& p, int degree_cap = 12);

}  // namespace cremona
