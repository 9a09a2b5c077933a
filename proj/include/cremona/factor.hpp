#pragma once

#include <utility>
#include <vector>

#include "cremona/bipoly.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

/// Factorization refuses inputs above this total degree.
inline constexpr int kFactorDegreeCap = 12;

struct UniFactor {
  UniPoly poly;  // primitive integer coefficients, positive leading sign
  int mult = 1;
};

struct UniFactorization {
  Rat unit;
  std::vector<UniFactor> factors;
};

/// Irreducible factorization over Q (squarefree split, then Berlekamp mod p,
/// Hensel lifting and subset recombination). unit * prod poly^mult == input.
UniFactorization factor_unipoly(const UniPoly& p, int degree_cap = kFactorDegreeCap);

/// Squarefree decomposition: list of (squarefree factor, multiplicity) with
/// pairwise coprime factors whose weighted product is the input up to a unit.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

struct BiFactor {
  BiPoly poly;  // primitive integer coefficients, canonical sign
  int mult = 1;
};

struct BiFactorization {
  Rat unit;
  std::vector<BiFactor> factors;
};

/// Irreducible factorization over Q in two variables (content split,
/// evaluation to a squarefree univariate image, series Hensel lifting in the
/// second variable, subset recombination with exact trial division).
BiFactorization factor_bipoly(const BiPoly& p, int degree_cap = kFactorDegreeCap);

}  // namespace cremona
