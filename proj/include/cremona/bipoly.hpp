#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/unipoly.hpp"

namespace cremona {

/// Sparse polynomial over Q in two variables, used for affine chart
/// computations. The variables are abstract; callers fix their meaning
/// (chart coordinates (u, v), blowup parameters (s, t), ...).
class BiPoly {
public:
  using Key = std::pair<int, int>;  // (x-exponent, y-exponent)

  BiPoly() = default;
  explicit BiPoly(Rat constant);

  static BiPoly var_x();
  static BiPoly var_y();
  static BiPoly monomial(int i, int j, Rat c);
  static BiPoly from_unipoly_x(const UniPoly& p);  // p(x)
  static BiPoly from_unipoly_y(const UniPoly& p);  // p(y)

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  int deg_x() const;
  int deg_y() const;
  int total_degree() const;     // -1 for zero
  int order_at_origin() const;  // min total degree of a term; fails on zero

  const std::map<Key, Rat>& terms() const { return c_; }
  Rat coeff(int i, int j) const;
  void set(int i, int j, Rat c);

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rat& s) const;
  BiPoly operator/(const Rat& s) const;
  bool operator==(const BiPoly& o) const { return c_ == o.c_; }

  BiPoly pow(int e) const;

  Rat eval(const Rat& x, const Rat& y) const;
  UniPoly eval_x(const Rat& x) const;  // substitute the first variable
  UniPoly eval_y(const Rat& y) const;  // substitute the second variable
  BiPoly subst(const BiPoly& fx, const BiPoly& fy) const;
  BiPoly derivative_x() const;
  BiPoly derivative_y() const;

  /// Coefficients as polynomials in y, indexed by x-degree.
  std::vector<UniPoly> coeffs_by_x() const;
  static BiPoly from_coeffs_by_x(const std::vector<UniPoly>& v);
  std::vector<UniPoly> coeffs_by_y() const;
  static BiPoly from_coeffs_by_y(const std::vector<UniPoly>& v);

  std::string to_string(const std::string& vx = "u",
                        const std::string& vy = "v") const;

private:
  std::map<Key, Rat> c_;
};

/// Primitive integer form with canonical sign (the grlex-leading coefficient
/// is positive); zero maps to zero.
BiPoly canonical_bipoly(const BiPoly& p);

/// gcd up to units, returned in canonical form; gcd(0, 0) = 0.
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);

std::optional<BiPoly> try_exact_div(const BiPoly& a, const BiPoly& b);
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
bool divides(const BiPoly& d, const BiPoly& a);

/// Resultant eliminating the first variable; result is univariate in y.
UniPoly resultant_x(const BiPoly& a, const BiPoly& b);
/// Resultant eliminating the second variable; result is univariate in x.
UniPoly resultant_y(const BiPoly& a, const BiPoly& b);

/// Interpolation through distinct nodes.
UniPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points);

}  // namespace cremona
