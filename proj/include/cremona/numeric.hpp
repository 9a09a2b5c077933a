#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline int sign(const Int& a) { return sgn(a); }
inline int sign(const Rat& a) { return sgn(a); }

/// Rational from a possibly non-canonical fraction; denominator must be nonzero.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorCode::SyntaxError, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, long e);

inline std::string to_string(const Int& a) { return a.get_str(); }

/// Canonical "a/b" (or "a" when b == 1); reused by every serializer so
/// byte-stable output only depends on the value.
std::string to_string(const Rat& r);

/// Parses "a" or "a/b" with optional sign. Returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& text);

/// Divides every entry by the gcd and fixes the sign of the first nonzero
/// entry to be positive. Rejects the all-zero vector.
std::vector<Int> primitive_vector(const std::vector<Int>& v);

/// Clears denominators of a rational vector, then normalizes as above.
std::vector<Int> primitive_vector(const std::vector<Rat>& v);

}  // namespace cremona
