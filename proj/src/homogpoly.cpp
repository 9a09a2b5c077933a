#include "cremona/homogpoly.hpp"

#include <algorithm>
#include <sstream>

#include "cremona/factor.hpp"

namespace cremona {

HomogPoly3::HomogPoly3(Rat constant) {
  if (constant != 0) c_[{0, 0, 0}] = std::move(constant);
}

HomogPoly3 HomogPoly3::variable(int i) {
  require_internal(i >= 0 && i <= 2, "variable index out of range");
  Key k{0, 0, 0};
  k[i] = 1;
  HomogPoly3 p;
  p.c_[k] = Rat(1);
  return p;
}

HomogPoly3 HomogPoly3::monomial(int a, int b, int c, Rat coeff) {
  HomogPoly3 p;
  if (coeff != 0) p.c_[{a, b, c}] = std::move(coeff);
  return p;
}

bool HomogPoly3::is_homogeneous() const {
  if (c_.empty()) return true;
  int d = -1;
  for (auto& [k, v] : c_) {
    int t = k[0] + k[1] + k[2];
    if (d < 0) d = t;
    if (t != d) return false;
  }
  return true;
}

int HomogPoly3::degree() const {
  if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "degree of zero polynomial");
  if (!is_homogeneous())
    fail(ErrorCode::NotHomogeneous, "terms of unequal total degree");
  const Key& k = c_.begin()->first;
  return k[0] + k[1] + k[2];
}

int HomogPoly3::max_term_degree() const {
  int d = -1;
  for (auto& [k, v] : c_) d = std::max(d, k[0] + k[1] + k[2]);
  return d;
}

Rat HomogPoly3::coeff(int a, int b, int c) const {
  auto it = c_.find({a, b, c});
  return it == c_.end() ? Rat(0) : it->second;
}

void HomogPoly3::set(int a, int b, int c, Rat coeff) {
  if (coeff == 0)
    c_.erase({a, b, c});
  else
    c_[{a, b, c}] = std::move(coeff);
}

HomogPoly3 HomogPoly3::operator-() const {
  HomogPoly3 r(*this);
  for (auto& [k, v] : r.c_) v = -v;
  return r;
}

HomogPoly3 HomogPoly3::operator+(const HomogPoly3& o) const {
  HomogPoly3 r(*this);
  for (auto& [k, v] : o.c_) {
    auto it = r.c_.find(k);
    if (it == r.c_.end()) {
      r.c_[k] = v;
    } else {
      it->second += v;
      if (it->second == 0) r.c_.erase(it);
    }
  }
  return r;
}

HomogPoly3 HomogPoly3::operator-(const HomogPoly3& o) const { return *this + (-o); }

HomogPoly3 HomogPoly3::operator*(const HomogPoly3& o) const {
  HomogPoly3 r;
  for (auto& [ka, va] : c_)
    for (auto& [kb, vb] : o.c_) {
      Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
      auto it = r.c_.find(k);
      if (it == r.c_.end()) {
        Rat p = va * vb;
        if (p != 0) r.c_[k] = std::move(p);
      } else {
        it->second += va * vb;
        if (it->second == 0) r.c_.erase(it);
      }
    }
  return r;
}

HomogPoly3 HomogPoly3::operator*(const Rat& s) const {
  if (s == 0) return HomogPoly3();
  HomogPoly3 r(*this);
  for (auto& [k, v] : r.c_) v *= s;
  return r;
}

HomogPoly3 HomogPoly3::pow(int e) const {
  require_internal(e >= 0, "negative polynomial power");
  HomogPoly3 acc(Rat(1)), b(*this);
  while (e > 0) {
    if (e & 1) acc = acc * b;
    if (e >>= 1; e > 0) b = b * b;
  }
  return acc;
}

HomogPoly3 HomogPoly3::derivative(int var) const {
  HomogPoly3 r;
  for (auto& [k, v] : c_) {
    if (k[var] == 0) continue;
    Key kk = k;
    kk[var] -= 1;
    r.c_[kk] = v * Rat(k[var]);
  }
  return r;
}

Rat HomogPoly3::eval(const Rat& x, const Rat& y, const Rat& z) const {
  Rat acc(0);
  for (auto& [k, v] : c_)
    acc += v * rat_pow(x, k[0]) * rat_pow(y, k[1]) * rat_pow(z, k[2]);
  return acc;
}

Rat HomogPoly3::eval(const std::array<Int, 3>& p) const {
  return eval(Rat(p[0]), Rat(p[1]), Rat(p[2]));
}

HomogPoly3 HomogPoly3::subst(const std::array<HomogPoly3, 3>& f) const {
  std::array<std::vector<HomogPoly3>, 3> cache;
  for (int i = 0; i < 3; ++i) cache[i] = {HomogPoly3(Rat(1))};
  auto power = [&](int i, int e) {
    while (static_cast<int>(cache[i].size()) <= e)
      cache[i].push_back(cache[i].back() * f[i]);
    return cache[i][e];
  };
  HomogPoly3 acc;
  for (auto& [k, v] : c_)
    acc = acc + power(0, k[0]) * power(1, k[1]) * power(2, k[2]) * v;
  return acc;
}

BiPoly HomogPoly3::dehomogenize(int chart) const {
  require_internal(chart >= 0 && chart <= 2, "chart index out of range");
  int i1 = chart == 0 ? 1 : 0;
  int i2 = chart == 2 ? 1 : 2;
  BiPoly r;
  for (auto& [k, v] : c_) {
    BiPoly t = BiPoly::monomial(k[i1], k[i2], v);
    r = r + t;
  }
  return r;
}

std::string HomogPoly3::to_string() const {
  if (c_.empty()) return "0";
  std::vector<std::pair<Key, Rat>> ts(c_.begin(), c_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int ta = a.first[0] + a.first[1] + a.first[2];
    int tb = b.first[0] + b.first[1] + b.first[2];
    if (ta != tb) return ta > tb;
    return a.first > b.first;  // lex on (x, y, z) exponents
  });
  static const char* vars[3] = {"x", "y", "z"};
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : ts) {
    Rat a = abs(c);
    if (first)
      os << (sign(c) < 0 ? "-" : "");
    else
      os << (sign(c) < 0 ? " - " : " + ");
    first = false;
    bool any_var = k[0] + k[1] + k[2] > 0;
    bool unit = (a == 1) && any_var;
    if (!unit) os << cremona::to_string(a);
    bool star = !unit;
    for (int i = 0; i < 3; ++i) {
      if (k[i] == 0) continue;
      if (star) os << "*";
      os << vars[i];
      if (k[i] > 1) os << "^" << k[i];
      star = true;
    }
  }
  return os.str();
}

HomogPoly3 homogenize(const BiPoly& p, int chart, int target_degree) {
  require_internal(chart >= 0 && chart <= 2, "chart index out of range");
  int i1 = chart == 0 ? 1 : 0;
  int i2 = chart == 2 ? 1 : 2;
  HomogPoly3 r;
  for (auto& [k, v] : p.terms()) {
    int fill = target_degree - k.first - k.second;
    if (fill < 0)
      fail(ErrorCode::DegreeMismatch, "homogenization target below term degree");
    HomogPoly3::Key kk{0, 0, 0};
    kk[i1] = k.first;
    kk[i2] = k.second;
    kk[chart] = fill;
    r.set(kk[0], kk[1], kk[2], v);
  }
  return r;
}

HomogPoly3::Key grlex_leading(const HomogPoly3& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "leading term of zero");
  HomogPoly3::Key best{-1, -1, -1};
  int bt = -1;
  for (auto& [k, v] : p.terms()) {
    int t = k[0] + k[1] + k[2];
    if (t > bt || (t == bt && k > best)) {
      bt = t;
      best = k;
    }
  }
  return best;
}

HomogPoly3 canonical_homog(const HomogPoly3& p) {
  if (p.is_zero()) return p;
  Int l(1);
  for (auto& [k, v] : p.terms()) l = int_lcm(l, den(v));
  Int g(0);
  for (auto& [k, v] : p.terms()) g = int_gcd(g, num(v) * (l / den(v)));
  auto lead = grlex_leading(p);
  Rat scale = make_rat(l, g);
  if (sign(p.coeff(lead[0], lead[1], lead[2])) < 0) scale = -scale;
  return p * scale;
}

namespace {

// Componentwise minimum exponents: the monomial content.
HomogPoly3::Key monomial_content(const HomogPoly3& p) {
  HomogPoly3::Key m{-1, -1, -1};
  for (auto& [k, v] : p.terms()) {
    if (m[0] < 0) {
      m = k;
      continue;
    }
    for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], k[i]);
  }
  return m;
}

HomogPoly3 divide_monomial(const HomogPoly3& p, const HomogPoly3::Key& m) {
  HomogPoly3 r;
  for (auto& [k, v] : p.terms()) r.set(k[0] - m[0], k[1] - m[1], k[2] - m[2], v);
  return r;
}

}  // namespace

HomogPoly3 homog_gcd(const HomogPoly3& a, const HomogPoly3& b) {
  if (a.is_zero()) return canonical_homog(b);
  if (b.is_zero()) return canonical_homog(a);
  auto ma = monomial_content(a), mb = monomial_content(b);
  HomogPoly3::Key mg{std::min(ma[0], mb[0]), std::min(ma[1], mb[1]),
                     std::min(ma[2], mb[2])};
  HomogPoly3 pa = divide_monomial(a, ma), pb = divide_monomial(b, mb);
  // z no longer divides either stripped part, so the z-chart is faithful:
  // rehomogenizing the bivariate gcd to its own total degree is exact.
  BiPoly g2 = bipoly_gcd(pa.dehomogenize(2), pb.dehomogenize(2));
  HomogPoly3 g = homogenize(g2, 2, g2.total_degree());
  HomogPoly3 mono = HomogPoly3::monomial(mg[0], mg[1], mg[2], Rat(1));
  return canonical_homog(g * mono);
}

HomogPoly3 homog_gcd3(const HomogPoly3& a, const HomogPoly3& b,
                      const HomogPoly3& c) {
  return homog_gcd(homog_gcd(a, b), c);
}

std::optional<HomogPoly3> try_exact_div(const HomogPoly3& a, const HomogPoly3& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return HomogPoly3();
  auto kb = grlex_leading(b);
  Rat cb = b.coeff(kb[0], kb[1], kb[2]);
  HomogPoly3 rem(a), quo;
  while (!rem.is_zero()) {
    auto kr = grlex_leading(rem);
    int i = kr[0] - kb[0], j = kr[1] - kb[1], k = kr[2] - kb[2];
    if (i < 0 || j < 0 || k < 0) return std::nullopt;
    HomogPoly3 t = HomogPoly3::monomial(i, j, k,
                                        rem.coeff(kr[0], kr[1], kr[2]) / cb);
    quo = quo + t;
    rem = rem - t * b;
  }
  return quo;
}

HomogPoly3 exact_div(const HomogPoly3& a, const HomogPoly3& b) {
  auto q = try_exact_div(a, b);
  if (!q) fail(ErrorCode::InternalError, "inexact trivariate division");
  return *q;
}

bool divides(const HomogPoly3& d, const HomogPoly3& a) {
  if (d.is_zero()) return a.is_zero();
  return try_exact_div(a, d).has_value();
}

HomogFactorization factor_homog(const HomogPoly3& p, int degree_cap) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  if (!p.is_homogeneous())
    fail(ErrorCode::NotHomogeneous, "factorization requires a form");
  int d = p.degree();
  if (d > degree_cap)
    fail(ErrorCode::DegreeTooLarge, "degree " + std::to_string(d) +
                                        " exceeds factorization cap " +
                                        std::to_string(degree_cap));
  HomogFactorization out;
  out.unit = Rat(1);
  if (d == 0) {
    out.unit = p.coeff(0, 0, 0);
    return out;
  }
  auto m = monomial_content(p);
  HomogPoly3 core = divide_monomial(p, m);
  for (int i = 0; i < 3; ++i)
    if (m[i] > 0) out.factors.push_back({HomogPoly3::variable(i), m[i]});

  if (core.max_term_degree() > 0) {
    BiFactorization bf = factor_bipoly(core.dehomogenize(2), degree_cap);
    for (auto& f : bf.factors) {
      HomogPoly3 h = canonical_homog(homogenize(f.poly, 2, f.poly.total_degree()));
      out.factors.push_back({h, f.mult});
    }
  }
  // unit from the grlex-leading coefficients
  auto kl = grlex_leading(p);
  Rat lead = p.coeff(kl[0], kl[1], kl[2]);
  HomogPoly3 prod(Rat(1));
  for (auto& f : out.factors) prod = prod * f.poly.pow(f.mult);
  auto kp = grlex_leading(prod);
  require_internal(kp == kl, "factor product has a different leading term");
  out.unit = lead / prod.coeff(kp[0], kp[1], kp[2]);
  return out;
}

}  // namespace cremona
