#include "cremona/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace cremona {

BiPoly::BiPoly(Rat constant) {
  if (constant != 0) c_[{0, 0}] = std::move(constant);
}

BiPoly BiPoly::var_x() { return monomial(1, 0, Rat(1)); }
BiPoly BiPoly::var_y() { return monomial(0, 1, Rat(1)); }

BiPoly BiPoly::monomial(int i, int j, Rat c) {
  BiPoly p;
  if (c != 0) p.c_[{i, j}] = std::move(c);
  return p;
}

BiPoly BiPoly::from_unipoly_x(const UniPoly& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i)
    if (p[i] != 0) r.c_[{i, 0}] = p[i];
  return r;
}

BiPoly BiPoly::from_unipoly_y(const UniPoly& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i)
    if (p[i] != 0) r.c_[{0, i}] = p[i];
  return r;
}

bool BiPoly::is_constant() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == Key{0, 0});
}

int BiPoly::deg_x() const {
  int d = -1;
  for (auto& [k, v] : c_) d = std::max(d, k.first);
  return d;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (auto& [k, v] : c_) d = std::max(d, k.second);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (auto& [k, v] : c_) d = std::max(d, k.first + k.second);
  return d;
}

int BiPoly::order_at_origin() const {
  if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "order of zero polynomial");
  int d = -1;
  for (auto& [k, v] : c_) {
    int t = k.first + k.second;
    if (d < 0 || t < d) d = t;
  }
  return d;
}

Rat BiPoly::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Rat(0) : it->second;
}

void BiPoly::set(int i, int j, Rat c) {
  if (c == 0)
    c_.erase({i, j});
  else
    c_[{i, j}] = std::move(c);
}

BiPoly BiPoly::operator-() const {
  BiPoly r(*this);
  for (auto& [k, v] : r.c_) v = -v;
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r(*this);
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

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (auto& [ka, va] : c_)
    for (auto& [kb, vb] : o.c_) {
      Key k{ka.first + kb.first, ka.second + kb.second};
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

BiPoly BiPoly::operator*(const Rat& s) const {
  if (s == 0) return BiPoly();
  BiPoly r(*this);
  for (auto& [k, v] : r.c_) v *= s;
  return r;
}

BiPoly BiPoly::operator/(const Rat& s) const {
  if (s == 0) fail(ErrorCode::InternalError, "division by zero scalar");
  return *this * (Rat(1) / s);
}

BiPoly BiPoly::pow(int e) const {
  require_internal(e >= 0, "negative polynomial power");
  BiPoly acc(Rat(1)), b(*this);
  while (e > 0) {
    if (e & 1) acc = acc * b;
    if (e >>= 1; e > 0) b = b * b;
  }
  return acc;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  // Horner in x over cached y-powers; degrees are small here.
  Rat acc(0);
  for (auto& [k, v] : c_) acc += v * rat_pow(x, k.first) * rat_pow(y, k.second);
  return acc;
}

UniPoly BiPoly::eval_x(const Rat& x) const {
  std::vector<Rat> out;
  for (auto& [k, v] : c_) {
    if (k.second >= static_cast<int>(out.size())) out.resize(k.second + 1, Rat(0));
    out[k.second] += v * rat_pow(x, k.first);
  }
  return UniPoly(std::move(out));
}

UniPoly BiPoly::eval_y(const Rat& y) const {
  std::vector<Rat> out;
  for (auto& [k, v] : c_) {
    if (k.first >= static_cast<int>(out.size())) out.resize(k.first + 1, Rat(0));
    out[k.first] += v * rat_pow(y, k.second);
  }
  return UniPoly(std::move(out));
}

BiPoly BiPoly::subst(const BiPoly& fx, const BiPoly& fy) const {
  // Powers are cached; exponents stay small in chart compositions.
  std::vector<BiPoly> px = {BiPoly(Rat(1))}, py = {BiPoly(Rat(1))};
  auto power = [](std::vector<BiPoly>& cache, const BiPoly& b, int e) {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * b);
    return cache[e];
  };
  BiPoly acc;
  for (auto& [k, v] : c_)
    acc = acc + power(px, fx, k.first) * power(py, fy, k.second) * v;
  return acc;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly r;
  for (auto& [k, v] : c_)
    if (k.first > 0) r.c_[{k.first - 1, k.second}] = v * Rat(k.first);
  return r;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly r;
  for (auto& [k, v] : c_)
    if (k.second > 0) r.c_[{k.first, k.second - 1}] = v * Rat(k.second);
  return r;
}

std::vector<UniPoly> BiPoly::coeffs_by_x() const {
  std::vector<std::vector<Rat>> rows(deg_x() + 1);
  for (auto& [k, v] : c_) {
    auto& row = rows[k.first];
    if (k.second >= static_cast<int>(row.size())) row.resize(k.second + 1, Rat(0));
    row[k.second] = v;
  }
  std::vector<UniPoly> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.emplace_back(std::move(row));
  return out;
}

BiPoly BiPoly::from_coeffs_by_x(const std::vector<UniPoly>& v) {
  BiPoly r;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    for (int j = 0; j <= v[i].degree(); ++j)
      if (v[i][j] != 0) r.c_[{i, j}] = v[i][j];
  return r;
}

std::vector<UniPoly> BiPoly::coeffs_by_y() const {
  std::vector<std::vector<Rat>> rows(deg_y() + 1);
  for (auto& [k, v] : c_) {
    auto& row = rows[k.second];
    if (k.first >= static_cast<int>(row.size())) row.resize(k.first + 1, Rat(0));
    row[k.first] = v;
  }
  std::vector<UniPoly> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.emplace_back(std::move(row));
  return out;
}

BiPoly BiPoly::from_coeffs_by_y(const std::vector<UniPoly>& v) {
  BiPoly r;
  for (int j = 0; j < static_cast<int>(v.size()); ++j)
    for (int i = 0; i <= v[j].degree(); ++i)
      if (v[j][i] != 0) r.c_[{i, j}] = v[j][i];
  return r;
}

std::string BiPoly::to_string(const std::string& vx, const std::string& vy) const {
  if (c_.empty()) return "0";
  // grlex descending for readability
  std::vector<std::pair<Key, Rat>> ts(c_.begin(), c_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : ts) {
    Rat a = abs(c);
    if (first)
      os << (sign(c) < 0 ? "-" : "");
    else
      os << (sign(c) < 0 ? " - " : " + ");
    first = false;
    bool unit = (a == 1) && (k.first > 0 || k.second > 0);
    if (!unit) os << cremona::to_string(a);
    bool star = !unit;
    auto emit = [&](const std::string& v, int e) {
      if (e == 0) return;
      if (star) os << "*";
      os << v;
      if (e > 1) os << "^" << e;
      star = true;
    };
    emit(vx, k.first);
    emit(vy, k.second);
  }
  return os.str();
}

BiPoly canonical_bipoly(const BiPoly& p) {
  if (p.is_zero()) return p;
  Int l(1);
  for (auto& [k, v] : p.terms()) l = int_lcm(l, den(v));
  Int g(0);
  for (auto& [k, v] : p.terms()) g = int_gcd(g, num(v) * (l / den(v)));
  // leading term in grlex order
  BiPoly::Key lead{-1, -1};
  int lt = -1;
  Rat lead_c;
  for (auto& [k, v] : p.terms()) {
    int t = k.first + k.second;
    if (t > lt || (t == lt && k > lead)) {
      lt = t;
      lead = k;
      lead_c = v;
    }
  }
  Rat scale = make_rat(l, g);
  if (sign(lead_c) < 0) scale = -scale;
  return p * scale;
}

namespace {

// x-content: gcd over Q[y] of the x-coefficients.
UniPoly content_x(const BiPoly& p) {
  UniPoly g;
  for (const UniPoly& c : p.coeffs_by_x()) g = poly_gcd(g, c);
  return g;
}

BiPoly divide_content_x(const BiPoly& p, const UniPoly& cont) {
  auto rows = p.coeffs_by_x();
  for (UniPoly& r : rows)
    if (!r.is_zero()) r = exact_div(r, cont);
  return BiPoly::from_coeffs_by_x(rows);
}

// Pseudo-remainder of a by b, both x-major with UniPoly coefficients in y.
std::vector<UniPoly> pseudo_rem_x(std::vector<UniPoly> a, const std::vector<UniPoly>& b) {
  int db = static_cast<int>(b.size()) - 1;
  const UniPoly& lb = b.back();
  auto deg = [](const std::vector<UniPoly>& v) {
    int d = static_cast<int>(v.size()) - 1;
    while (d >= 0 && v[d].is_zero()) --d;
    return d;
  };
  int da = deg(a);
  if (da < db) return a;
  int steps = da - db + 1;
  for (int s = 0; s < steps && deg(a) >= db; ++s) {
    int cur = deg(a);
    UniPoly lead = a[cur];
    // a = lb * a - lead * x^{cur-db} * b
    for (UniPoly& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i)
      a[cur - db + i] = a[cur - db + i] - lead * b[i];
    a.resize(deg(a) + 1);
    if (a.empty()) break;
  }
  return a;
}

BiPoly primitive_x(const BiPoly& p) {
  if (p.is_zero()) return p;
  UniPoly c = content_x(p);
  return divide_content_x(p, c);
}

}  // namespace

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return canonical_bipoly(b);
  if (b.is_zero()) return canonical_bipoly(a);
  if (a.is_constant() || b.is_constant()) return BiPoly(Rat(1));

  UniPoly ca = content_x(a), cb = content_x(b);
  UniPoly cg = poly_gcd(ca, cb);
  BiPoly pa = divide_content_x(a, ca), pb = divide_content_x(b, cb);
  BiPoly cont = BiPoly::from_unipoly_y(cg);

  if (pa.deg_x() == 0 || pb.deg_x() == 0) {
    // a primitive part of x-degree 0 is a unit in Q[y][x] direction
    return canonical_bipoly(cont);
  }

  // Early exit: specialize y where the leading x-coefficient of pa survives;
  // coprime images certify coprime primitive parts.
  UniPoly la = pa.coeffs_by_x().back();
  for (long r = 0;; r = (r > 0 ? -r : -r + 1)) {
    if (la.eval(Rat(r)) == 0) continue;
    UniPoly ga = pa.eval_y(Rat(r));
    UniPoly gb = pb.eval_y(Rat(r));
    if (gb.is_zero()) break;  // unlucky; fall through to the remainder walk
    UniPoly g1 = poly_gcd(ga, gb);
    if (g1.degree() == 0) return canonical_bipoly(cont);
    break;
  }

  // Primitive remainder sequence in x over Q[y].
  std::vector<UniPoly> f = pa.coeffs_by_x(), g = pb.coeffs_by_x();
  auto degx = [](const std::vector<UniPoly>& v) {
    int d = static_cast<int>(v.size()) - 1;
    while (d >= 0 && v[d].is_zero()) --d;
    return d;
  };
  if (degx(f) < degx(g)) std::swap(f, g);
  while (true) {
    int dg = degx(g);
    if (dg < 0) {
      BiPoly res = primitive_x(BiPoly::from_coeffs_by_x(f));
      return canonical_bipoly(cont * res);
    }
    if (dg == 0) return canonical_bipoly(cont);
    std::vector<UniPoly> r = pseudo_rem_x(f, g);
    f = std::move(g);
    g = primitive_x(BiPoly::from_coeffs_by_x(r)).coeffs_by_x();
  }
}

std::optional<BiPoly> try_exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return BiPoly();
  // grlex leading-term division
  auto leading = [](const BiPoly& p) {
    BiPoly::Key best{-1, -1};
    int bt = -1;
    for (auto& [k, v] : p.terms()) {
      int t = k.first + k.second;
      if (t > bt || (t == bt && k > best)) {
        bt = t;
        best = k;
      }
    }
    return std::make_pair(best, p.coeff(best.first, best.second));
  };
  auto [kb, cb] = leading(b);
  BiPoly rem(a), quo;
  while (!rem.is_zero()) {
    auto [kr, cr] = leading(rem);
    int i = kr.first - kb.first, j = kr.second - kb.second;
    if (i < 0 || j < 0) return std::nullopt;
    BiPoly t = BiPoly::monomial(i, j, cr / cb);
    quo = quo + t;
    rem = rem - t * b;
  }
  return quo;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  auto q = try_exact_div(a, b);
  if (!q) fail(ErrorCode::InternalError, "inexact bivariate division");
  return *q;
}

bool divides(const BiPoly& d, const BiPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return try_exact_div(a, d).has_value();
}

UniPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  UniPoly acc;
  for (std::size_t i = 0; i < points.size(); ++i) {
    UniPoly basis(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      basis = basis * UniPoly(std::vector<Rat>{-points[j].first, Rat(1)});
      denom *= points[i].first - points[j].first;
    }
    acc = acc + basis * (points[i].second / denom);
  }
  return acc;
}

namespace {

// Resultant by evaluation and interpolation. elim = true eliminates x
// (result in y); otherwise eliminates y (result in x).
UniPoly resultant_impl(const BiPoly& a, const BiPoly& b, bool elim_x) {
  const BiPoly& A = a;
  const BiPoly& B = b;
  if (A.is_zero() || B.is_zero()) return UniPoly();
  int da = elim_x ? A.deg_x() : A.deg_y();
  int db = elim_x ? B.deg_x() : B.deg_y();
  if (da < 0 || db < 0) return UniPoly();
  if (da == 0 && db == 0) return UniPoly(Rat(1));  // res of two constants
  // Degree bound of the resultant in the surviving variable.
  int oa = elim_x ? A.deg_y() : A.deg_x();
  int ob = elim_x ? B.deg_y() : B.deg_x();
  int bound = da * ob + db * oa;
  UniPoly la = elim_x ? A.coeffs_by_x().back() : A.coeffs_by_y().back();
  UniPoly lb = elim_x ? B.coeffs_by_x().back() : B.coeffs_by_y().back();
  std::vector<std::pair<Rat, Rat>> samples;
  for (long k = 0; static_cast<int>(samples.size()) <= bound; k = (k > 0 ? -k : -k + 1)) {
    Rat t(k);
    if (la.eval(t) == 0 || lb.eval(t) == 0) continue;  // keep degrees exact
    UniPoly ua = elim_x ? A.eval_y(t) : A.eval_x(t);
    UniPoly ub = elim_x ? B.eval_y(t) : B.eval_x(t);
    samples.emplace_back(t, resultant(ua, ub));
  }
  return lagrange_interpolate(samples);
}

}  // namespace

UniPoly resultant_x(const BiPoly& a, const BiPoly& b) {
  return resultant_impl(a, b, true);
}

UniPoly resultant_y(const BiPoly& a, const BiPoly& b) {
  return resultant_impl(a, b, false);
}

}  // namespace cremona
