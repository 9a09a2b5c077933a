#include <algorithm>
#include <cstdint>
#include <numeric>

#include "cremona/factor.hpp"

namespace cremona {
namespace {

// ---------- arithmetic mod a small prime p (p < 2^31) ----------

using PVec = std::vector<std::int64_t>;  // coefficients in [0, p), low first

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PVec& a) { return static_cast<int>(a.size()) - 1; }

std::int64_t pmod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t ppow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = pmod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::int64_t pinv(std::int64_t a, std::int64_t p) { return ppow(a, p - 2, p); }


PVec psub(const PVec& a, const PVec& b, std::int64_t p) {
  PVec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = pmod(r[i] - b[i], p);
  ptrim(r);
  return r;
}

PVec pmul(const PVec& a, const PVec& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  ptrim(r);
  return r;
}

PVec pscale(const PVec& a, std::int64_t c, std::int64_t p) {
  PVec r(a);
  for (auto& x : r) x = x * pmod(c, p) % p;
  ptrim(r);
  return r;
}

// a = q*b + r with deg r < deg b; b nonzero.
std::pair<PVec, PVec> pdivmod(const PVec& a, const PVec& b, std::int64_t p) {
  PVec r(a), q;
  int db = pdeg(b);
  std::int64_t ilb = pinv(b.back(), p);
  if (pdeg(r) >= db) q.assign(pdeg(r) - db + 1, 0);
  while (pdeg(r) >= db) {
    int k = pdeg(r) - db;
    std::int64_t c = r.back() * ilb % p;
    q[k] = c;
    for (int i = 0; i <= db; ++i) r[i + k] = pmod(r[i + k] - c * b[i], p);
    ptrim(r);
  }
  ptrim(q);
  return {q, r};
}

PVec pmonic(const PVec& a, std::int64_t p) {
  if (a.empty()) return a;
  return pscale(a, pinv(a.back(), p), p);
}

PVec pgcd(PVec a, PVec b, std::int64_t p) {
  while (!b.empty()) {
    PVec r = pdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, p);
}

// s*a + t*b = g (monic gcd); used to seed Hensel lifting.
void pext_gcd(const PVec& a, const PVec& b, std::int64_t p, PVec& g, PVec& s, PVec& t) {
  PVec r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = pdivmod(r0, r1, p);
    PVec s2 = psub(s0, pmul(q, s1, p), p);
    PVec t2 = psub(t0, pmul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  std::int64_t il = pinv(r0.back(), p);
  g = pscale(r0, il, p);
  s = pscale(s0, il, p);
  t = pscale(t0, il, p);
}

PVec pderiv(const PVec& a, std::int64_t p) {
  if (a.size() <= 1) return {};
  PVec r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = a[i] * (static_cast<std::int64_t>(i) % p) % p;
  ptrim(r);
  return r;
}

PVec reduce_mod_p(const std::vector<Int>& a, std::int64_t p) {
  PVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int m = a[i] % p;
    std::int64_t v = m.get_si();
    r[i] = v < 0 ? v + p : v;
  }
  ptrim(r);
  return r;
}

// ---------- Berlekamp factorization of a squarefree monic f mod p ----------

std::vector<PVec> berlekamp(const PVec& f, std::int64_t p) {
  int n = pdeg(f);
  if (n == 1) return {f};

  // Frobenius matrix: column i holds x^{i*p} mod f.
  PVec xp = {0, 1};
  {  // x^p mod f
    PVec base = {0, 1}, acc = {1};
    std::int64_t e = p;
    while (e > 0) {
      if (e & 1) acc = pdivmod(pmul(acc, base, p), f, p).second;
      base = pdivmod(pmul(base, base, p), f, p).second;
      e >>= 1;
    }
    xp = acc;
  }
  std::vector<PVec> cols(n);
  PVec cur = {1};
  for (int i = 0; i < n; ++i) {
    cols[i] = cur;
    cols[i].resize(n, 0);
    cur = pdivmod(pmul(cur, xp, p), f, p).second;
  }

  // Nullspace of (Q - I) over F_p, vectors as columns.
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      m[i][j] = pmod(cols[j][i] - (i == j ? 1 : 0), p);
  std::vector<int> pivot_col(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int row = rank; row < n; ++row)
      if (m[row][col] != 0) { piv = row; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    std::int64_t inv = pinv(m[rank][col], p);
    for (int j = 0; j < n; ++j) m[rank][j] = m[rank][j] * inv % p;
    for (int row = 0; row < n; ++row) {
      if (row == rank || m[row][col] == 0) continue;
      std::int64_t c = m[row][col];
      for (int j = 0; j < n; ++j) m[row][j] = pmod(m[row][j] - c * m[rank][j], p);
    }
    pivot_col[rank++] = col;
  }
  std::vector<PVec> basis;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    PVec v(n, 0);
    v[col] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = pmod(-m[i][col], p);
    ptrim(v);
    basis.push_back(v);
  }

  // Each nullspace vector v satisfies v mod f_i in F_p for every irreducible
  // factor f_i, so gcd(u, v - c) over all c splits u along distinct residues.
  std::size_t r = basis.size();  // number of irreducible factors
  std::vector<PVec> factors = {pmonic(f, p)};
  for (const PVec& v : basis) {
    if (factors.size() == r) break;
    if (pdeg(v) < 1) continue;  // the constant vector splits nothing
    std::vector<PVec> next;
    for (const PVec& u : factors) {
      if (pdeg(u) <= 1) {
        next.push_back(u);
        continue;
      }
      PVec rem = u;
      for (std::int64_t c = 0; c < p && pdeg(rem) > 0; ++c) {
        PVec h = pgcd(rem, psub(v, PVec{c}, p), p);
        if (pdeg(h) > 0 && pdeg(h) < pdeg(rem)) {
          next.push_back(h);
          rem = pdivmod(rem, h, p).first;
        } else if (pdeg(h) == pdeg(rem)) {
          break;  // v is constant modulo rem; no further split from v
        }
      }
      if (pdeg(rem) > 0) next.push_back(pmonic(rem, p));
    }
    factors = std::move(next);
  }
  return factors;
}

// ---------- arithmetic mod m (big modulus), symmetric representatives ----------

using MVec = std::vector<Int>;

void mtrim(MVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mdeg(const MVec& a) { return static_cast<int>(a.size()) - 1; }

Int mred(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

MVec mreduce(const MVec& a, const Int& m) {
  MVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mred(a[i], m);
  mtrim(r);
  return r;
}

MVec madd(const MVec& a, const MVec& b, const Int& m) {
  MVec r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mred(r[i] + b[i], m);
  mtrim(r);
  return r;
}

MVec msub(const MVec& a, const MVec& b, const Int& m) {
  MVec r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mred(r[i] - b[i], m);
  mtrim(r);
  return r;
}

MVec mmul(const MVec& a, const MVec& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  MVec r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return mreduce(r, m);
}

Int minv(const Int& a, const Int& m) {
  Int r;
  int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  require_internal(ok != 0, "non-invertible element in Hensel lifting");
  return r;
}

// Division by b with invertible leading coefficient.
std::pair<MVec, MVec> mdivmod(const MVec& a, const MVec& b, const Int& m) {
  MVec r(a), q;
  int db = mdeg(b);
  Int ilb = minv(b.back(), m);
  if (mdeg(r) >= db) q.assign(mdeg(r) - db + 1, Int(0));
  while (mdeg(r) >= db) {
    int k = mdeg(r) - db;
    Int c = mred(r.back() * ilb, m);
    q[k] = c;
    for (int i = 0; i <= db; ++i) r[i + k] = mred(r[i + k] - c * b[i], m);
    mtrim(r);
  }
  mtrim(q);
  return {q, r};
}

MVec lift_from_p(const PVec& a) {
  MVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<long>(a[i]));
  return r;
}

// One quadratic Hensel step: modulus m -> m^2 for f == g*h, with h monic.
// Also lifts the Bezout pair s*g + t*h == 1 (deg s < deg h, deg t < deg g).
void hensel_step(const MVec& f, MVec& g, MVec& h, MVec& s, MVec& t, const Int& m) {
  Int m2 = m * m;
  MVec e = msub(mreduce(f, m2), mmul(g, h, m2), m2);
  auto [q, r] = mdivmod(mmul(s, e, m2), h, m2);
  MVec gstar = madd(madd(g, mmul(t, e, m2), m2), mmul(q, g, m2), m2);
  MVec hstar = madd(h, r, m2);
  MVec b = msub(madd(mmul(s, gstar, m2), mmul(t, hstar, m2), m2), MVec{Int(1)}, m2);
  auto [c, d] = mdivmod(mmul(s, b, m2), hstar, m2);
  MVec sstar = msub(s, d, m2);
  MVec tstar = msub(msub(t, mmul(t, b, m2), m2), mmul(c, gstar, m2), m2);
  g = std::move(gstar);
  h = std::move(hstar);
  s = std::move(sstar);
  t = std::move(tstar);
}

// Lift the mod-p factorization f == lc * prod locals (locals monic) to mod
// p^k >= target. Returns the lifted monic locals.
std::vector<MVec> hensel_lift_all(const std::vector<Int>& f,
                                  const std::vector<PVec>& locals,
                                  std::int64_t p, const Int& target, Int& modulus_out) {
  Int m(static_cast<long>(p));
  while (m < target) m = m * m;
  // m is now p^(2^j) >= target; lift every pair up to that modulus.
  std::vector<MVec> lifted;
  MVec fcur(f.begin(), f.end());
  std::vector<PVec> rest(locals);
  while (rest.size() > 1) {
    PVec h0 = rest.front();
    rest.erase(rest.begin());
    // g0 = lc * product of remaining locals, mod p
    std::int64_t l = Int(fcur.back() % p).get_si();
    if (l < 0) l += p;
    PVec g0 = {l};
    for (const PVec& x : rest) g0 = pmul(g0, x, p);
    PVec gg, ss, tt;
    pext_gcd(g0, h0, p, gg, ss, tt);
    require_internal(pdeg(gg) == 0, "local factors not coprime");
    MVec g = lift_from_p(g0), h = lift_from_p(h0);
    MVec s = lift_from_p(ss), t = lift_from_p(tt);
    Int cur(static_cast<long>(p));
    MVec fm = mreduce(fcur, m);
    while (cur < m) {
      hensel_step(fm, g, h, s, t, cur);
      cur = cur * cur;
    }
    lifted.push_back(mreduce(h, m));
    fcur = mreduce(g, m);  // remaining product, carries lc
  }
  // last factor: make the remaining product monic
  if (!rest.empty()) {
    MVec last = mreduce(fcur, m);
    Int il = minv(last.back(), m);
    for (Int& x : last) x = mred(x * il, m);
    lifted.push_back(last);
  }
  modulus_out = m;
  return lifted;
}

MVec symmetric(const MVec& a, const Int& m) {
  MVec r(a);
  Int half = m / 2;
  for (Int& x : r)
    if (x > half) x -= m;
  return r;
}

// ---------- Zassenhaus recombination ----------

std::vector<Int> prim_int(const MVec& a) {
  Int g(0);
  for (const Int& x : a) g = int_gcd(g, x);
  if (g == 0) return {};
  if (sign(a.back()) < 0) g = -g;
  std::vector<Int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Factor a primitive squarefree integer polynomial of degree >= 2.
std::vector<UniPoly> factor_squarefree_int(const std::vector<Int>& f) {
  int n = static_cast<int>(f.size()) - 1;

  // prime search: p must not divide lc and must keep f squarefree
  std::int64_t p = 0;
  std::vector<PVec> locals;
  for (std::int64_t cand = 3;; cand += 2) {
    bool prime = cand > 2;
    for (std::int64_t d = 3; d * d <= cand; d += 2)
      if (cand % d == 0) { prime = false; break; }
    if (!prime) continue;
    if (f.back() % cand == 0) continue;
    PVec fp = reduce_mod_p(f, cand);
    if (pdeg(fp) != n) continue;
    PVec g = pgcd(fp, pderiv(fp, cand), cand);
    if (pdeg(g) != 0) continue;
    p = cand;
    locals = berlekamp(pmonic(fp, cand), cand);
    break;
  }
  if (locals.size() == 1) return {from_integer(f)};

  // coefficient bound for any factor of f times lc (Mignotte-style, 1-norm)
  Int norm1(0);
  for (const Int& c : f) norm1 += abs(c);
  Int target = 2 * abs(f.back()) * (Int(1) << n) * norm1 + 1;

  Int modulus;
  std::vector<MVec> lifted = hensel_lift_all(f, locals, p, target, modulus);

  std::vector<UniPoly> out;
  std::vector<Int> fcur(f);
  std::vector<int> alive(lifted.size());
  std::iota(alive.begin(), alive.end(), 0);

  for (int card = 1; card <= static_cast<int>(alive.size()); ++card) {
    bool progressed = true;
    while (progressed && 2 * card <= static_cast<int>(alive.size())) {
      progressed = false;
      std::vector<int> idx(card);
      std::iota(idx.begin(), idx.end(), 0);
      int na = static_cast<int>(alive.size());
      if (card > na) break;
      do {
        MVec prod = {mred(fcur.back(), modulus)};
        for (int i : idx) prod = mmul(prod, lifted[alive[i]], modulus);
        std::vector<Int> cand = prim_int(symmetric(prod, modulus));
        if (cand.empty()) continue;
        UniPoly candq = from_integer(cand);
        UniPoly fq = from_integer(fcur);
        if (candq.degree() >= 1 && divides(candq, fq)) {
          out.push_back(candq);
          UniPoly quo = exact_div(fq, candq);
          IntegerForm qi = integer_form(quo);
          fcur = qi.prim;
          std::vector<int> keep;
          for (int i = 0; i < na; ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end())
              keep.push_back(alive[i]);
          alive = std::move(keep);
          progressed = true;
          break;
        }
      } while (next_combination(idx, na));
    }
    if (static_cast<int>(alive.size()) < 2 * (card + 1)) break;
  }
  if (static_cast<int>(fcur.size()) - 1 >= 1) out.push_back(from_integer(fcur));
  return out;
}

}  // namespace

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  if (f.degree() <= 0) return out;
  // Yun's algorithm
  UniPoly g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  UniPoly b = exact_div(f, g);
  UniPoly c = exact_div(f.derivative(), g);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

UniFactorization factor_unipoly(const UniPoly& p, int degree_cap) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  if (p.degree() > degree_cap)
    fail(ErrorCode::DegreeTooLarge,
         "degree " + std::to_string(p.degree()) + " exceeds factorization cap " +
             std::to_string(degree_cap));
  UniFactorization res;
  res.unit = Rat(1);
  if (p.degree() == 0) {
    res.unit = p[0];
    return res;
  }
  for (auto& [sf, mult] : squarefree_decomposition(p)) {
    IntegerForm iform = integer_form(sf);
    if (iform.prim.size() <= 1) continue;
    std::vector<UniPoly> irr;
    if (static_cast<int>(iform.prim.size()) - 1 == 1)
      irr = {from_integer(iform.prim)};
    else
      irr = factor_squarefree_int(iform.prim);
    for (UniPoly& q : irr) res.factors.push_back({q, mult});
  }
  // unit = input / product of factor powers; both sides have equal degree,
  // so the quotient is the ratio of leading coefficients.
  Rat lead(1);
  for (auto& fm : res.factors) lead *= rat_pow(fm.poly.leading(), fm.mult);
  res.unit = p.leading() / lead;
  return res;
}

std::vector<Rat> rational_roots(const UniPoly& a) {
  std::vector<Rat> out;
  if (a.is_zero() || a.degree() == 0) return out;
  UniPoly sf = squarefree_part(a);
  UniFactorization fac = factor_unipoly(sf);
  for (auto& fm : fac.factors)
    if (fm.poly.degree() == 1) out.push_back(-fm.poly[0] / fm.poly[1]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cremona
