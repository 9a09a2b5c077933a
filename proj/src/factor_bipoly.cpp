#include <algorithm>

#include "cremona/factor.hpp"

namespace cremona {
namespace {

UniPoly truncate(const UniPoly& p, int K) {
  if (p.degree() < K) return p;
  std::vector<Rat> c(p.coeffs().begin(), p.coeffs().begin() + K);
  return UniPoly(std::move(c));
}

// Inverse of a power series with nonzero constant term, modulo y^K.
UniPoly series_inv(const UniPoly& a, int K) {
  require_internal(!a.is_zero() && a[0] != 0, "series inverse needs a unit");
  std::vector<Rat> b(K, Rat(0));
  Rat i0 = Rat(1) / a[0];
  b[0] = i0;
  for (int n = 1; n < K; ++n) {
    Rat s(0);
    for (int i = 1; i <= n; ++i) s += a[i] * b[n - i];
    b[n] = -i0 * s;
  }
  return UniPoly(std::move(b));
}

// Polynomials in x whose coefficients are truncated series in y.
using SVec = std::vector<UniPoly>;

int sdeg(const SVec& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[d].is_zero()) --d;
  return d;
}

void strim(SVec& a) { a.resize(sdeg(a) + 1); }

SVec sadd(const SVec& a, const SVec& b) {
  SVec r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  strim(r);
  return r;
}

SVec ssub(const SVec& a, const SVec& b) {
  SVec r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  strim(r);
  return r;
}

SVec smul(const SVec& a, const SVec& b, int K) {
  if (sdeg(a) < 0 || sdeg(b) < 0) return {};
  SVec r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = r[i + j] + truncate(a[i] * b[j], K);
  }
  for (auto& c : r) c = truncate(c, K);
  strim(r);
  return r;
}

SVec sscale(const SVec& a, const UniPoly& s, int K) {
  SVec r(a);
  for (auto& c : r) c = truncate(c * s, K);
  strim(r);
  return r;
}

// Division by a divisor whose leading series coefficient is a unit.
std::pair<SVec, SVec> sdivmod(const SVec& a, const SVec& b, int K) {
  int db = sdeg(b);
  require_internal(db >= 0, "series division by zero");
  UniPoly ilb = series_inv(b[db], K);
  SVec r(a), q;
  strim(r);
  if (sdeg(r) >= db) q.assign(sdeg(r) - db + 1, UniPoly());
  while (sdeg(r) >= db) {
    int k = sdeg(r) - db;
    UniPoly c = truncate(r[sdeg(r)] * ilb, K);
    q[k] = c;
    for (int i = 0; i <= db; ++i)
      r[i + k] = truncate(r[i + k] - c * b[i], K);
    strim(r);
  }
  strim(q);
  return {q, r};
}

SVec to_svec(const BiPoly& p) { return p.coeffs_by_x(); }

BiPoly from_svec(const SVec& v) { return BiPoly::from_coeffs_by_x(v); }

// Extended gcd over Q: s*a + t*b == g (monic).
void ext_gcd_q(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0(Rat(1)), s1, t0, t1(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  Rat il = Rat(1) / r0.leading();
  g = r0 * il;
  s = s0 * il;
  t = t0 * il;
}

// One Hensel step in the series direction: doubles the working precision.
void hensel_step_series(const SVec& f, SVec& g, SVec& h, SVec& s, SVec& t, int K) {
  SVec e = ssub(f, smul(g, h, K));
  auto [q, r] = sdivmod(smul(s, e, K), h, K);
  SVec gs = sadd(sadd(g, smul(t, e, K)), smul(q, g, K));
  SVec hs = sadd(h, r);
  SVec one = {UniPoly(Rat(1))};
  SVec b = ssub(sadd(smul(s, gs, K), smul(t, hs, K)), one);
  auto [c, d] = sdivmod(smul(s, b, K), hs, K);
  SVec ss = ssub(s, d);
  SVec ts = ssub(ssub(t, smul(t, b, K)), smul(c, gs, K));
  g = std::move(gs);
  h = std::move(hs);
  s = std::move(ss);
  t = std::move(ts);
}

BiPoly x_primitive_part(const BiPoly& p) {
  if (p.is_zero()) return p;
  UniPoly cont;
  for (const UniPoly& c : p.coeffs_by_x()) cont = poly_gcd(cont, c);
  auto rows = p.coeffs_by_x();
  for (UniPoly& r : rows)
    if (!r.is_zero()) r = exact_div(r, cont);
  return BiPoly::from_coeffs_by_x(rows);
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

// Factor an x-primitive squarefree bivariate polynomial with deg_x >= 1.
std::vector<BiPoly> factor_squarefree_bi(const BiPoly& S) {
  if (S.deg_y() <= 0) {
    // univariate in x
    std::vector<BiPoly> out;
    UniPoly u = S.eval_y(Rat(0));
    for (auto& f : factor_unipoly(u).factors)
      out.push_back(canonical_bipoly(BiPoly::from_unipoly_x(f.poly)));
    return out;
  }

  const int dy = S.deg_y();
  UniPoly lcx = S.coeffs_by_x().back();

  // Evaluation point: leading coefficient survives and the image stays
  // squarefree. Such a point exists since disc_x(S) is not identically zero.
  Rat y0;
  UniPoly u;
  for (long k = 0;; k = (k > 0 ? -k : -k + 1)) {
    Rat cand(k);
    if (lcx.eval(cand) == 0) continue;
    UniPoly img = S.eval_y(cand);
    if (poly_gcd(img, img.derivative()).degree() != 0) continue;
    y0 = cand;
    u = img;
    break;
  }

  UniFactorization uf = factor_unipoly(u);
  if (uf.factors.size() == 1 && uf.factors[0].mult == 1)
    return {canonical_bipoly(S)};

  // Shift so the fiber sits at y = 0, then lift the factorization y-adically.
  BiPoly T = S.subst(BiPoly::var_x(), BiPoly::var_y() + BiPoly(y0));
  const int K = 2 * dy + 1;
  SVec fT = to_svec(T);
  UniPoly lcT = fT.back();  // unit series: lcT(0) = lcx(y0) != 0

  std::vector<UniPoly> locals;  // monic univariate irreducible images
  for (auto& f : uf.factors) locals.push_back(f.poly.monic());

  std::vector<SVec> lifted;
  {
    SVec fcur = fT;
    std::vector<UniPoly> rest(locals);
    while (rest.size() > 1) {
      UniPoly h0 = rest.front();
      rest.erase(rest.begin());
      UniPoly g0(fcur.back()[0]);  // constant term of the current lc series
      for (const UniPoly& x : rest) g0 = g0 * x;
      UniPoly gg, ss, tt;
      ext_gcd_q(g0, h0, gg, ss, tt);
      require_internal(gg.degree() == 0 || gg == UniPoly(Rat(1)),
                       "local factors not coprime");
      // seed: everything exact at y = 0
      SVec g, h, s, t;
      for (int i = 0; i <= g0.degree(); ++i) g.push_back(UniPoly(g0[i]));
      for (int i = 0; i <= h0.degree(); ++i) h.push_back(UniPoly(h0[i]));
      for (int i = 0; i <= ss.degree(); ++i) s.push_back(UniPoly(ss[i]));
      for (int i = 0; i <= tt.degree(); ++i) t.push_back(UniPoly(tt[i]));
      int prec = 1;
      while (prec < K) {
        hensel_step_series(fcur, g, h, s, t, K);
        prec *= 2;
      }
      lifted.push_back(h);
      fcur = g;
    }
    if (!rest.empty()) {
      // last factor: strip the leading-coefficient series
      UniPoly il = series_inv(fcur[sdeg(fcur)], K);
      lifted.push_back(sscale(fcur, il, K));
    }
  }

  // Subset recombination with exact trial division.
  std::vector<BiPoly> out;
  BiPoly Scur = T;
  std::vector<int> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);

  for (int card = 1; 2 * card <= static_cast<int>(alive.size()); ++card) {
    bool progressed = true;
    while (progressed && 2 * card <= static_cast<int>(alive.size())) {
      progressed = false;
      int na = static_cast<int>(alive.size());
      std::vector<int> idx(card);
      for (int i = 0; i < card; ++i) idx[i] = i;
      do {
        SVec prod = {truncate(Scur.coeffs_by_x().back(), K)};
        for (int i : idx) prod = smul(prod, lifted[alive[i]], K);
        BiPoly cand = x_primitive_part(from_svec(prod));
        if (!cand.is_constant() && divides(cand, Scur)) {
          out.push_back(cand);
          Scur = exact_div(Scur, cand);
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
  }
  if (!Scur.is_constant()) out.push_back(Scur);

  // Undo the shift.
  for (BiPoly& f : out)
    f = canonical_bipoly(f.subst(BiPoly::var_x(), BiPoly::var_y() - BiPoly(y0)));
  return out;
}

}  // namespace

BiFactorization factor_bipoly(const BiPoly& p, int degree_cap) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  if (p.total_degree() > degree_cap)
    fail(ErrorCode::DegreeTooLarge, "degree " + std::to_string(p.total_degree()) +
                                        " exceeds factorization cap " +
                                        std::to_string(degree_cap));
  BiFactorization out;
  out.unit = Rat(1);
  if (p.is_constant()) {
    out.unit = p.coeff(0, 0);
    return out;
  }

  auto push_unipoly_factors = [&](const UniPoly& q, bool in_x) {
    for (auto& f : factor_unipoly(q).factors) {
      BiPoly b = in_x ? BiPoly::from_unipoly_x(f.poly) : BiPoly::from_unipoly_y(f.poly);
      out.factors.push_back({canonical_bipoly(b), f.mult});
    }
  };

  if (p.deg_x() <= 0) {
    push_unipoly_factors(p.eval_x(Rat(0)), false);
  } else if (p.deg_y() <= 0) {
    push_unipoly_factors(p.eval_y(Rat(0)), true);
  } else {
    // pure-y content, then the squarefree core
    UniPoly cont;
    for (const UniPoly& c : p.coeffs_by_x()) cont = poly_gcd(cont, c);
    if (cont.degree() > 0) push_unipoly_factors(cont, false);
    BiPoly prim = x_primitive_part(p);

    BiPoly g = bipoly_gcd(prim, prim.derivative_x());
    BiPoly rad = g.is_constant() ? prim : exact_div(prim, g);
    for (const BiPoly& f : factor_squarefree_bi(rad)) {
      int mult = 0;
      BiPoly rem = prim;
      while (divides(f, rem)) {
        rem = exact_div(rem, f);
        ++mult;
      }
      require_internal(mult >= 1, "radical factor does not divide the input");
      out.factors.push_back({f, mult});
    }
  }

  // unit check: the factorization must reproduce the input exactly
  BiPoly prod(Rat(1));
  for (auto& f : out.factors) prod = prod * f.poly.pow(f.mult);
  // unit = p / prod, a scalar
  auto any = prod.terms().begin();
  Rat u = p.coeff(any->first.first, any->first.second) / any->second;
  require_internal(prod * u == p, "factor product does not reproduce the input");
  out.unit = u;
  return out;
}

}  // namespace cremona
