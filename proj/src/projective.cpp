#include "cremona/projective.hpp"

#include <sstream>

#include "cremona/errors.hpp"
#include "cremona/factor.hpp"

namespace cremona {

bool ProjPoint::operator<(const ProjPoint& o) const {
  for (int i = 0; i < 3; ++i) {
    int s = cmp(c[i], o.c[i]);
    if (s != 0) return s < 0;
  }
  return false;
}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << "(" << c[0].get_str() << " : " << c[1].get_str() << " : "
     << c[2].get_str() << ")";
  return os.str();
}

ProjPoint make_point(const Int& a, const Int& b, const Int& c) {
  std::vector<Int> v = primitive_vector(std::vector<Int>{a, b, c});
  return ProjPoint{{v[0], v[1], v[2]}};
}

ProjPoint make_point(const Rat& a, const Rat& b, const Rat& c) {
  std::vector<Int> v = primitive_vector(std::vector<Rat>{a, b, c});
  return ProjPoint{{v[0], v[1], v[2]}};
}

PlaneCurve::PlaneCurve(HomogPoly3 e) {
  if (e.is_zero()) fail(ErrorCode::ZeroPolynomial, "curve equation is zero");
  if (e.degree() < 1)  // also rejects non-homogeneous input
    fail(ErrorCode::ZeroPolynomial, "curve equation is constant");
  HomogFactorization fac = factor_homog(e);
  if (fac.factors.size() != 1 || fac.factors[0].mult != 1)
    fail(ErrorCode::NotIrreducible,
         "curve equation is not irreducible: " + e.to_string());
  eq = canonical_homog(e);
}

namespace {

// Trial division up to a fixed bound; probable-prime cofactors are accepted.
// Returns false when a composite cofactor above the bound remains.
bool factor_integer(Int n, std::vector<std::pair<Int, int>>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return true;
  Int p = 2;
  const Int bound = 1000000;
  while (p <= bound && p * p <= n) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) == 0) return false;
    out.push_back({n, 1});
  }
  return true;
}

bool all_divisors(const Int& n, std::vector<Int>& out) {
  std::vector<std::pair<Int, int>> fac;
  if (!factor_integer(n, fac)) return false;
  out = {Int(1)};
  for (const auto& [p, e] : fac) {
    size_t base = out.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
      if (out.size() > 200000) return false;
    }
  }
  return true;
}

// Rational roots by the divisor test; usable above the factorization degree
// cap. complete == false means some roots may have been missed.
std::pair<std::vector<Rat>, bool> divisor_roots(const UniPoly& u) {
  std::vector<Rat> roots;
  IntegerForm f = integer_form(u);
  const std::vector<Int>& c = f.prim;
  size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  if (lo > 0) roots.push_back(Rat(0));
  if (lo + 1 >= c.size()) return {roots, true};
  std::vector<Int> ps, qs;
  bool complete = all_divisors(c[lo], ps) && all_divisors(c.back(), qs);
  if (!complete) return {roots, false};
  for (const Int& p : ps)
    for (const Int& q : qs) {
      if (int_gcd(p, q) != 1) continue;
      for (int s : {1, -1}) {
        Rat r = make_rat(s * p, q);
        if (u.eval(r) == 0) roots.push_back(r);
      }
    }
  return {roots, true};
}

}  // namespace

BinaryRoots binary_form_roots(const UniPoly& dehomog_at_y1, bool y_divides) {
  BinaryRoots out;
  if (y_divides) out.roots.push_back({Int(1), Int(0)});
  const UniPoly& u = dehomog_at_y1;
  if (u.is_zero())
    fail(ErrorCode::ZeroPolynomial, "binary form root search on zero input");
  if (u.degree() == 0) return out;
  UniPoly sf = squarefree_part(u);
  std::vector<Rat> rr;
  bool complete = true;
  if (sf.degree() <= kFactorDegreeCap) {
    rr = rational_roots(u);
  } else {
    auto [r, ok] = divisor_roots(sf);
    rr = std::move(r);
    complete = ok;
  }
  for (const Rat& r : rr) out.roots.push_back({num(r), den(r)});
  out.enumeration_capped = !complete;
  out.has_irrational =
      !complete || sf.degree() > static_cast<int>(rr.size());
  return out;
}

}  // namespace cremona
