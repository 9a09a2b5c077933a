#include "cremona/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace cremona {

UniPoly::UniPoly(Rat constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() { return monomial(1, Rat(1)); }

UniPoly UniPoly::monomial(int deg, Rat c) {
  UniPoly p;
  if (c == 0) return p;
  p.c_.assign(deg + 1, Rat(0));
  p.c_[deg] = std::move(c);
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UniPoly::operator[](int i) const {
  static const Rat zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

const Rat& UniPoly::leading() const {
  if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "leading of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (Rat& x : r.c_) x = -x;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (s == 0) return UniPoly();
  UniPoly r(*this);
  for (Rat& x : r.c_) x *= s;
  return r;
}

UniPoly UniPoly::operator/(const Rat& s) const {
  if (s == 0) fail(ErrorCode::InternalError, "division by zero scalar");
  return *this * (Rat(1) / s);
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const { return *this / leading(); }

UniPoly UniPoly::shift(const Rat& a) const {
  return compose(UniPoly(std::vector<Rat>{a, Rat(1)}));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * inner + UniPoly(*it);
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = abs(c);
    if (first)
      os << (sign(c) < 0 ? "-" : "");
    else
      os << (sign(c) < 0 ? " - " : " + ");
    first = false;
    bool unit = (a == 1) && i > 0;
    if (!unit) os << cremona::to_string(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  UniPoly q, r(a);
  const int db = b.degree();
  const Rat& lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Rat c = r.leading() / lb;
    UniPoly t = UniPoly::monomial(k, c);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorCode::InternalError, "inexact polynomial division");
  return q;
}

bool divides(const UniPoly& d, const UniPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly f(a), g(b);
  while (!g.is_zero()) {
    UniPoly r = divmod(f, g).second;
    f = g;
    g = r;
  }
  if (f.is_zero()) return f;
  return f.monic();
}

UniPoly squarefree_part(const UniPoly& a) {
  if (a.degree() <= 0) return a;
  UniPoly g = poly_gcd(a, a.derivative());
  if (g.degree() == 0) return a;
  return exact_div(a, g);  // g is monic, so the division is exact
}

Rat resultant(const UniPoly& a, const UniPoly& b) {
  // res along the remainder sequence: res(a,b) = (-1)^{mn} lc(b)^{m-deg r} res(b,r).
  if (a.is_zero() || b.is_zero()) return Rat(0);
  if (a.degree() == 0) return rat_pow(a.leading(), b.degree());
  if (b.degree() == 0) return rat_pow(b.leading(), a.degree());
  int m = a.degree(), n = b.degree();
  Rat flip = (m % 2 == 1 && n % 2 == 1) ? Rat(-1) : Rat(1);
  if (m < n) return flip * resultant(b, a);
  UniPoly r = divmod(a, b).second;
  int dr = r.is_zero() ? -1 : r.degree();
  if (r.is_zero()) return Rat(0);
  return flip * rat_pow(b.leading(), m - dr) * resultant(b, r);
}

IntegerForm integer_form(const UniPoly& a) {
  if (a.is_zero()) return {Rat(0), {}};
  Int l(1);
  for (const Rat& c : a.coeffs()) l = int_lcm(l, den(c));
  std::vector<Int> w;
  w.reserve(a.coeffs().size());
  Int g(0);
  for (const Rat& c : a.coeffs()) {
    w.push_back(num(c) * (l / den(c)));
    g = int_gcd(g, w.back());
  }
  if (sign(w.back()) < 0) g = -g;
  for (Int& x : w) x /= g;
  return {make_rat(g, l), std::move(w)};
}

UniPoly from_integer(const std::vector<Int>& coeffs) {
  std::vector<Rat> r;
  r.reserve(coeffs.size());
  for (const Int& c : coeffs) r.emplace_back(c);
  return UniPoly(std::move(r));
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& f) {
  std::vector<UniPoly> seq;
  seq.push_back(f);
  seq.push_back(f.derivative());
  while (!seq.back().is_zero()) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  return seq;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int var_at(const std::vector<UniPoly>& seq, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const UniPoly& p : seq) signs.push_back(sign(p.eval(x)));
  return variations(signs);
}

int var_at_infinity(const std::vector<UniPoly>& seq, int dir) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const UniPoly& p : seq) {
    if (p.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sign(p.leading());
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

Rat cauchy_bound(const UniPoly& f) {
  Rat m(0);
  const Rat& lc = f.leading();
  for (int i = 0; i < f.degree(); ++i) {
    Rat a = abs(f[i] / lc);
    if (a > m) m = a;
  }
  return m + 1;
}

}  // namespace

int count_real_roots(const UniPoly& a, const Rat& lo, const Rat& hi) {
  if (a.degree() <= 0) return 0;
  UniPoly f = squarefree_part(a);
  if (f.degree() <= 0) return 0;
  auto seq = sturm_chain(f);
  return var_at(seq, lo) - var_at(seq, hi);
}

int count_real_roots(const UniPoly& a) {
  if (a.degree() <= 0) return 0;
  UniPoly f = squarefree_part(a);
  if (f.degree() <= 0) return 0;
  auto seq = sturm_chain(f);
  return var_at_infinity(seq, -1) - var_at_infinity(seq, +1);
}

std::optional<RootInterval> isolate_largest_real_root(const UniPoly& a,
                                                      const Rat& width) {
  if (a.degree() <= 0) return std::nullopt;
  if (width <= 0) fail(ErrorCode::InternalError, "nonpositive isolation width");
  UniPoly f = squarefree_part(a);
  if (f.degree() == 1) {
    Rat r = -f[0] / f[1];
    return RootInterval{r, r};
  }
  auto seq = sturm_chain(f);
  Rat bound = cauchy_bound(f);
  auto count_above = [&](const Rat& x) { return var_at(seq, x) - var_at(seq, bound); };
  if (var_at(seq, -bound) - var_at(seq, bound) == 0) return std::nullopt;

  // Exact shortcut: when the largest root is rational and the degree is
  // within the factorization cap, return a degenerate interval.
  if (f.degree() <= 12) {
    std::vector<Rat> rs = rational_roots(f);
    if (!rs.empty()) {
      Rat rmax = rs.front();
      for (const Rat& r : rs)
        if (r > rmax) rmax = r;
      if (count_above(rmax) == 0) return RootInterval{rmax, rmax};
    }
  }

  Rat lo = -bound, hi = bound;
  // Keep the largest root in (lo, hi]; f(hi) != 0 since hi exceeds the bound.
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    if (f.eval(mid) == 0) {
      // mid is a root; it is the largest iff nothing lies above it.
      if (count_above(mid) == 0) return RootInterval{mid, mid};
      lo = mid;
      continue;
    }
    if (count_above(mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return RootInterval{lo, hi};
}

}  // namespace cremona
