#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/numeric.hpp"

namespace cremona {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(Rat constant);
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly variable();                  // x
  static UniPoly monomial(int deg, Rat c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& operator[](int i) const;          // 0 outside the support
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& s) const;
  UniPoly operator/(const Rat& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  Rat eval(const Rat& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;                       // fails on zero
  UniPoly shift(const Rat& a) const;           // p(x + a)
  UniPoly compose(const UniPoly& inner) const;

  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Exact quotient; fails if the division leaves a remainder.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

bool divides(const UniPoly& d, const UniPoly& a);

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

UniPoly squarefree_part(const UniPoly& a);

/// res(a, b) computed along the Euclidean remainder sequence.
Rat resultant(const UniPoly& a, const UniPoly& b);

/// Content and primitive integer coefficients (content * prim == poly,
/// prim has integer coefficients with gcd 1 and positive leading sign).
struct IntegerForm {
  Rat content;
  std::vector<Int> prim;
};
IntegerForm integer_form(const UniPoly& a);
UniPoly from_integer(const std::vector<Int>& coeffs);

/// Number of distinct real roots of a in the half-open interval (lo, hi].
int count_real_roots(const UniPoly& a, const Rat& lo, const Rat& hi);
int count_real_roots(const UniPoly& a);

/// Closed interval [lo, hi] containing exactly the largest real root, with
/// hi - lo <= width; degenerate (lo == hi) when that root is rational and
/// the degree admits exact extraction. nullopt when a has no real root.
struct RootInterval {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
};
std::optional<RootInterval> isolate_largest_real_root(const UniPoly& a,
                                                      const Rat& width);

/// All rational roots (without multiplicity). Requires the squarefree part to
/// be within the factorization degree cap.
std::vector<Rat> rational_roots(const UniPoly& a);

}  // namespace cremona
