#include "cremona/pic.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "cremona/errors.hpp"

namespace cremona {
namespace {

// One blowup step on a local curve equation: substitute the chart at the
// given direction and strip the exceptional factor, leaving the strict
// transform centered at the new point.
BiPoly strict_step(const BiPoly& e, const Direction& d) {
  int m = e.order_at_origin();
  BiPoly s = BiPoly::var_x(), t = BiPoly::var_y();
  BiPoly shifted = t + BiPoly(direction_parameter(d));
  BiPoly u = (d.chart == 1) ? s : s * shifted;
  BiPoly v = (d.chart == 1) ? s * shifted : s;
  return exact_div(e.subst(u, v), s.pow(m));
}

void check_same_surface(const BlowupSurface& a, const BlowupSurface& b,
                        const char* what) {
  if (a != b)
    fail(ErrorCode::SurfaceMismatch,
         std::string(what) + " needs classes on one surface, got " +
             a.to_string() + " and " + b.to_string());
}

std::vector<Int> mat_apply(const IntMat& m, const std::vector<Int>& v) {
  require_internal(m.empty() || m[0].size() == v.size(),
                   "matrix/vector size mismatch");
  std::vector<Int> out(m.size(), Int(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] = Int(out[i] + m[i][j] * v[j]);
  return out;
}

void certify_morphism(const LiftedMap& beta) {
  LiftedIndeterminacy ind = indeterminacy_lifted(beta);
  if (!ind.points.empty())
    fail(ErrorCode::NotAMorphism,
         "lift is undefined at " + ind.points.front().to_string());
  if (!ind.residual.clean())
    fail(ErrorCode::ResidualIndeterminacy,
         "cannot certify an empty indeterminacy locus: " +
             ind.residual.notes.front());
}

// Degree-D monomial exponents in a fixed order.
std::vector<std::array<int, 3>> monomials_of_degree(int D) {
  std::vector<std::array<int, 3>> out;
  for (int a = D; a >= 0; --a)
    for (int b = D - a; b >= 0; --b) out.push_back({a, b, D - a - b});
  return out;
}

// One-dimensional kernel of the evaluation matrix of the degree-D monomials
// at the fit points; nullopt when the kernel is trivial or has dimension
// above one.
std::optional<std::vector<Rat>> kernel_vector(
    const std::vector<ProjPoint>& fit, int D) {
  std::vector<std::array<int, 3>> mono = monomials_of_degree(D);
  size_t cols = mono.size();
  std::vector<std::vector<Rat>> m;
  for (const ProjPoint& p : fit) {
    std::vector<Rat> row(cols);
    for (size_t j = 0; j < cols; ++j) {
      Int v(1);
      for (int k = 0; k < 3; ++k)
        for (int e = 0; e < mono[j][k]; ++e) v = Int(v * p.c[k]);
      row[j] = Rat(v);
    }
    m.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rat lead = m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] = Rat(m[row][j] / lead);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = col; j < cols; ++j)
        m[i][j] = Rat(m[i][j] - f * m[row][j]);
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  if (cols - pivot_col.size() != 1) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rat> v(cols, Rat(0));
  v[free_col] = Rat(1);
  for (size_t r = 0; r < pivot_col.size(); ++r)
    v[pivot_col[r]] = Rat(-m[r][free_col]);
  return v;
}

// Fits one curve of degree at most cap through the sampled bases, holding
// back part of the sample for verification.
std::optional<PlaneCurve> fit_image_curve(std::vector<ProjPoint> bases,
                                          int cap) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  for (int D = 1; D <= cap; ++D) {
    size_t need_fit = monomials_of_degree(D).size();
    size_t need_total = need_fit + static_cast<size_t>(D) + 1;
    if (bases.size() < need_total) continue;
    std::vector<ProjPoint> fit(bases.begin(), bases.end() - (D + 1));
    if (fit.size() < need_fit) continue;
    std::optional<std::vector<Rat>> kv = kernel_vector(fit, D);
    if (!kv) continue;
    std::vector<std::array<int, 3>> mono = monomials_of_degree(D);
    HomogPoly3 cand;
    for (size_t j = 0; j < mono.size(); ++j)
      if ((*kv)[j] != 0) cand.set(mono[j][0], mono[j][1], mono[j][2], (*kv)[j]);
    cand = canonical_homog(cand);
    bool ok = true;
    for (const ProjPoint& p : bases)
      if (cand.eval(p.c) != 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    try {
      return PlaneCurve(cand);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotIrreducible) throw;
    }
  }
  return std::nullopt;
}

std::variant<SurfacePoint, SurfaceCurve> image_of_curve(const LiftedMap& beta,
                                                        const SurfaceCurve& C,
                                                        int degree_cap) {
  int cap = degree_cap > 0 ? degree_cap : std::max(1, beta.base.degree());
  int total = (cap + 1) * (cap + 2) / 2 + cap + 1;
  std::vector<SurfacePoint> domain =
      sample_on_surface_curve(beta.domain, C, 2 * total + 4, {});
  std::vector<SurfacePoint> images;
  for (const SurfacePoint& p : domain) {
    SurfacePoint q = evaluate_lifted(beta, p);
    if (std::find(images.begin(), images.end(), q) == images.end())
      images.push_back(q);
  }
  require_internal(!images.empty(), "no image samples");
  if (images.size() == 1) return images.front();

  bool all_deep = true;
  for (const SurfacePoint& q : images)
    if (q.chain.empty()) all_deep = false;
  if (all_deep) {
    std::vector<int> matches;
    for (int j = 0; j < beta.codomain.depth(); ++j) {
      bool on = true;
      for (const SurfacePoint& q : images)
        if (multiplicity_at(beta.codomain, SurfaceCurve::exceptional(j), q) ==
            0) {
          on = false;
          break;
        }
      if (on) matches.push_back(j);
    }
    require_internal(matches.size() <= 1,
                     "image lies on two exceptional lines");
    if (matches.size() == 1) return SurfaceCurve::exceptional(matches[0]);
  }

  std::vector<ProjPoint> bases;
  for (const SurfacePoint& q : images) bases.push_back(q.base);
  std::optional<PlaneCurve> curve = fit_image_curve(std::move(bases), cap);
  if (!curve)
    fail(ErrorCode::InterpolationUnverified,
         "no curve of degree at most " + std::to_string(cap) +
             " passes through the sampled images of " + C.to_string());
  return SurfaceCurve::proper(*curve);
}

// The skip-th line of a fixed grid through no center base of the tower; the
// grid is wide enough that a tower never exhausts it.
PlaneCurve clean_line(const BlowupSurface& X, int skip) {
  for (int b = 0; b <= 17; ++b)
    for (int c = 0; c <= 17; ++c) {
      HomogPoly3 eq;
      eq.set(1, 0, 0, Rat(1));
      if (b != 0) eq.set(0, 1, 0, Rat(b));
      if (c != 0) eq.set(0, 0, 1, Rat(c));
      bool clean = true;
      for (const SurfacePoint& w : X.centers())
        if (w.chain.empty() && eq.eval(w.base.c) == 0) {
          clean = false;
          break;
        }
      if (!clean) continue;
      if (skip-- > 0) continue;
      return PlaneCurve(canonical_homog(eq));
    }
  require_internal(false, "no line clear of the centers");
  HomogPoly3 x;
  x.set(1, 0, 0, Rat(1));
  return PlaneCurve(x);
}

}  // namespace

std::string PicClass::to_string() const {
  std::string out;
  auto term = [&](const Int& k, const std::string& name) {
    if (k == 0) return;
    Int a = k;
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += (k < 0) ? " - " : " + ";
    }
    if (a < 0) a = Int(-a);
    if (a != 1) out += cremona::to_string(a) + " ";
    out += name;
  };
  term(c.empty() ? Int(0) : c[0], "H");
  for (size_t i = 1; i < c.size(); ++i)
    term(c[i], "E" + std::to_string(i));
  return out.empty() ? "0" : out;
}

PicClass zero_class(const BlowupSurface& X) {
  return PicClass{X, std::vector<Int>(1 + X.depth(), Int(0))};
}

PicClass h_class(const BlowupSurface& X) {
  PicClass out = zero_class(X);
  out.c[0] = 1;
  return out;
}

PicClass e_class(const BlowupSurface& X, int i) {
  require_internal(i >= 0 && i < X.depth(), "exceptional index out of range");
  PicClass out = zero_class(X);
  out.c[1 + i] = 1;
  return out;
}

PicClass add(const PicClass& a, const PicClass& b) {
  check_same_surface(a.surface, b.surface, "class sum");
  PicClass out = a;
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = Int(out.c[i] + b.c[i]);
  return out;
}

PicClass sub(const PicClass& a, const PicClass& b) {
  check_same_surface(a.surface, b.surface, "class difference");
  PicClass out = a;
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = Int(out.c[i] - b.c[i]);
  return out;
}

PicClass scale(const Int& k, const PicClass& a) {
  PicClass out = a;
  for (Int& v : out.c) v = Int(k * v);
  return out;
}

Int intersection(const PicClass& a, const PicClass& b) {
  check_same_surface(a.surface, b.surface, "intersection");
  require_internal(a.c.size() == b.c.size(), "class length mismatch");
  Int out = Int(a.c[0] * b.c[0]);
  for (size_t i = 1; i < a.c.size(); ++i) out = Int(out - a.c[i] * b.c[i]);
  return out;
}

int multiplicity_at(const BlowupSurface& X, const SurfaceCurve& C,
                    const SurfacePoint& p) {
  if (C.kind == SurfaceCurve::Kind::Proper) {
    BiPoly e = compose_form(C.curve.eq, local_chart(plane_point(p.base)));
    require_internal(!e.is_zero(), "curve equation vanished in a chart");
    for (const Direction& d : p.chain) {
      if (e.order_at_origin() == 0) return 0;
      e = strict_step(e, d);
    }
    return e.order_at_origin();
  }
  require_internal(C.center >= 0 && C.center < X.depth(),
                   "exceptional index out of range");
  const SurfacePoint& W = X.centers()[C.center];
  if (p.base != W.base || p.chain.size() <= W.chain.size()) return 0;
  if (!std::equal(W.chain.begin(), W.chain.end(), p.chain.begin())) return 0;
  // In the chart one level above W the exceptional line is {s = 0},
  // whichever direction the chain continues through.
  BiPoly e = BiPoly::var_x();
  for (size_t i = W.chain.size() + 1; i < p.chain.size(); ++i) {
    if (e.order_at_origin() == 0) return 0;
    e = strict_step(e, p.chain[i]);
  }
  return e.order_at_origin();
}

PicClass class_of_curve(const BlowupSurface& X, const SurfaceCurve& C) {
  PicClass out = zero_class(X);
  if (C.kind == SurfaceCurve::Kind::Proper) {
    out.c[0] = C.curve.degree();
    for (int i = 0; i < X.depth(); ++i)
      out.c[1 + i] = Int(-multiplicity_at(X, C, X.centers()[i]));
    return out;
  }
  require_internal(C.center >= 0 && C.center < X.depth(),
                   "exceptional index out of range");
  out.c[1 + C.center] = 1;
  for (int j = C.center + 1; j < X.depth(); ++j)
    out.c[1 + j] = Int(-multiplicity_at(X, C, X.centers()[j]));
  return out;
}

IntMat identity_mat(int n) {
  IntMat m(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  require_internal(n == 0 || a[0].size() == k, "matrix size mismatch");
  IntMat out(n, std::vector<Int>(p, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < p; ++j)
        out[i][j] = Int(out[i][j] + a[i][t] * b[t][j]);
    }
  return out;
}

IntMat mat_pow(const IntMat& a, int e) {
  require_internal(e >= 0 && a.size() == (a.empty() ? 0 : a[0].size()),
                   "power of a nonsquare matrix");
  IntMat out = identity_mat(static_cast<int>(a.size()));
  for (int i = 0; i < e; ++i) out = mat_mul(out, a);
  return out;
}

Int mat_det(const IntMat& a) {
  size_t n = a.size();
  if (n == 0) return Int(1);
  require_internal(a[0].size() == n, "determinant of a nonsquare matrix");
  IntMat m = a;
  Int prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return Int(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = Int((m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

UniPoly char_poly(const IntMat& a) {
  size_t n = a.size();
  std::vector<std::pair<Rat, Rat>> pts;
  for (size_t x = 0; x <= n; ++x) {
    IntMat m = a;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) m[i][j] = Int(-m[i][j]);
      m[i][i] = Int(m[i][i] + Int(x));
    }
    pts.push_back({Rat(Int(x)), Rat(mat_det(m))});
  }
  return lagrange_interpolate(pts);
}

PicClass LatticeHom::apply(const PicClass& a) const {
  check_same_surface(a.surface, source, "lattice map");
  return PicClass{target, mat_apply(m, a.c)};
}

std::variant<SurfacePoint, SurfaceCurve> morphism_image(const LiftedMap& beta,
                                                        const SurfaceCurve& C,
                                                        int degree_cap) {
  certify_morphism(beta);
  return image_of_curve(beta, C, degree_cap);
}

LatticeHom morphism_pushforward(const LiftedMap& beta) {
  certify_morphism(beta);
  const BlowupSurface& S = beta.domain;
  const BlowupSurface& Y = beta.codomain;
  int ks = S.depth(), ky = Y.depth();
  int d = std::max(1, beta.base.degree());
  int cap = std::max(d, 3 * (d - 1));

  auto column_of = [&](const std::variant<SurfacePoint, SurfaceCurve>& im) {
    if (std::holds_alternative<SurfacePoint>(im))
      return zero_class(Y).c;
    return class_of_curve(Y, std::get<SurfaceCurve>(im)).c;
  };

  // The line column: retry past candidate lines the map contracts.
  std::vector<Int> hcol;
  for (int attempt = 0;; ++attempt) {
    require_internal(attempt < 8, "every candidate line was contracted");
    PlaneCurve L = clean_line(S, attempt);
    std::variant<SurfacePoint, SurfaceCurve> im =
        image_of_curve(beta, SurfaceCurve::proper(L), cap);
    if (std::holds_alternative<SurfacePoint>(im)) continue;
    hcol = column_of(im);
    break;
  }

  // Exceptional columns, deepest first: the basis class over center i is the
  // irreducible line plus the basis classes whose centers sit on it.
  std::vector<std::vector<Int>> ecol(ks);
  for (int i = ks - 1; i >= 0; --i) {
    SurfaceCurve Ei = SurfaceCurve::exceptional(i);
    std::vector<Int> col = column_of(image_of_curve(beta, Ei, cap));
    for (int j = i + 1; j < ks; ++j) {
      int mult = multiplicity_at(S, Ei, S.centers()[j]);
      for (int r = 0; r < 1 + ky && mult > 0; ++r)
        col[r] = Int(col[r] + Int(mult) * ecol[j][r]);
    }
    ecol[i] = std::move(col);
  }

  LatticeHom out{S, Y, IntMat(1 + ky, std::vector<Int>(1 + ks, Int(0)))};
  for (int r = 0; r < 1 + ky; ++r) {
    out.m[r][0] = hcol[r];
    for (int i = 0; i < ks; ++i) out.m[r][1 + i] = ecol[i][r];
  }
  return out;
}

LatticeHom morphism_pullback(const LiftedMap& beta) {
  LatticeHom push = morphism_pushforward(beta);
  int rows = 1 + beta.domain.depth();
  int cols = 1 + beta.codomain.depth();
  LatticeHom out{beta.codomain, beta.domain,
                 IntMat(rows, std::vector<Int>(cols, Int(0)))};
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      Int v = push.m[j][i];
      if ((i > 0) != (j > 0)) v = Int(-v);
      out.m[i][j] = v;
    }
  return out;
}

std::vector<SurfaceCurve> morphism_contracted(const LiftedMap& beta) {
  LatticeHom push = morphism_pushforward(beta);

  std::vector<SurfaceCurve> candidates;
  for (int i = 0; i < beta.domain.depth(); ++i)
    candidates.push_back(SurfaceCurve::exceptional(i));
  for (const ContractedCurve& c : exceptional_curves(beta.base))
    candidates.push_back(SurfaceCurve::proper(c.curve));

  std::vector<SurfaceCurve> out;
  for (const SurfaceCurve& C : candidates) {
    PicClass cls = class_of_curve(beta.domain, C);
    bool contracted = push.apply(cls) == zero_class(beta.codomain);

    std::vector<SurfacePoint> samples =
        sample_on_surface_curve(beta.domain, C, 4, {});
    bool single = true;
    SurfacePoint first = evaluate_lifted(beta, samples[0]);
    for (size_t i = 1; i < samples.size(); ++i)
      if (!(evaluate_lifted(beta, samples[i]) == first)) single = false;
    require_internal(contracted == single,
                     "class and sampling disagree on a contracted curve");

    if (contracted) out.push_back(C);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cremona
