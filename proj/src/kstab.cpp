#include "arcstab/kstab.hpp"

#include <algorithm>
#include <stdexcept>

#include "arcstab/lp.hpp"

namespace arcstab {

Rational df_invariant(const HilbCoeffs& a, const ModelNumbers& b) {
  if (a.a0 == 0) throw InputError("a0 must be nonzero");
  return (b.b0 * a.a1 - b.b1 * a.a0) / (a.a0 * a.a0);
}

Rational model_norm(const ModelNumbers& b) {
  if (!b.l_mix || !b.l_top || !b.L_n) throw InputError("model norm needs l_mix, l_top and L^n");
  if (*b.L_n == 0) throw InputError("L^n must be nonzero");
  if (b.r <= 0) throw InputError("exponent r must be positive");
  if (b.n < 1) throw InputError("dimension must be at least one");
  Rational rn = 1;
  for (int i = 0; i < b.n; ++i) rn *= b.r;
  const Rational scale = Rational(b.n + 1) * *b.L_n;
  return *b.l_mix / scale - *b.l_top / (scale * rn);
}

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rational polygon_area(const std::vector<Point>& poly) {
  Rational s = 0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) s += cross(poly[0], poly[i], poly[i + 1]);
  return s / 2;
}

// Keeps g·x + c ≥ 0. Works for intervals (two endpoints) and polygons.
std::vector<Point> clip(const std::vector<Point>& poly, const AffineFunction& h) {
  if (poly.empty()) return poly;
  if (poly[0].size() == 1) {
    Rational lo = poly[0][0], hi = poly.back()[0];
    const Rational& g = h.gradient[0];
    if (g == 0) return h.constant >= 0 ? poly : std::vector<Point>{};
    Rational root = -h.constant / g;
    if (g > 0) lo = std::max(lo, root);
    else hi = std::min(hi, root);
    if (lo > hi) return {};
    return {{lo}, {hi}};
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    Rational ha = h(a), hb = h(b);
    if (ha >= 0) out.push_back(a);
    if ((ha > 0 && hb < 0) || (ha < 0 && hb > 0)) {
      Rational s = ha / (ha - hb);
      out.push_back({a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])});
    }
  }
  std::vector<Point> dedup;
  for (auto& p : out) {
    if (dedup.empty() || dedup.back() != p) dedup.push_back(std::move(p));
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

Rational measure(const std::vector<Point>& cell) {
  if (cell.empty()) return 0;
  if (cell[0].size() == 1) return cell.back()[0] - cell[0][0];
  return cell.size() < 3 ? Rational(0) : polygon_area(cell);
}

AffineFunction difference(const AffineFunction& a, const AffineFunction& b) {
  AffineFunction d{a.gradient, a.constant - b.constant};
  for (std::size_t i = 0; i < d.gradient.size(); ++i) d.gradient[i] -= b.gradient[i];
  return d;
}

// Region of P where piece j attains the maximum.
std::vector<Point> cell_of(const Polytope& P, const std::vector<AffineFunction>& pieces, std::size_t j) {
  std::vector<Point> cell = P.vertices();
  for (std::size_t i = 0; i < pieces.size() && !cell.empty(); ++i) {
    if (i != j) cell = clip(cell, difference(pieces[j], pieces[i]));
  }
  return cell;
}

// Integral of an affine function over a cell.
Rational integrate(const std::vector<Point>& cell, const AffineFunction& l) {
  if (cell.empty()) return 0;
  if (cell[0].size() == 1) return (cell.back()[0] - cell[0][0]) * (l(cell[0]) + l(cell.back())) / 2;
  Rational s = 0;
  for (std::size_t i = 1; i + 1 < cell.size(); ++i) {
    Point c = {(cell[0][0] + cell[i][0] + cell[i + 1][0]) / 3, (cell[0][1] + cell[i][1] + cell[i + 1][1]) / 3};
    s += cross(cell[0], cell[i], cell[i + 1]) / 2 * l(c);
  }
  return s;
}

// ∫_0^1 f(p + s(q - p)) ds; f is convex and piecewise affine on the segment.
Rational segment_average(const PLFunction& f, const Point& p, const Point& q) {
  std::vector<Rational> breaks = {0, 1};
  const auto& pieces = f.pieces();
  auto along = [&](const AffineFunction& l) {
    Rational at0 = l(p), at1 = l(q);
    return std::pair{at0, at1 - at0};
  };
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      auto [ci, si] = along(pieces[i]);
      auto [cj, sj] = along(pieces[j]);
      if (si == sj) continue;
      Rational s = (cj - ci) / (si - sj);
      if (s > 0 && s < 1) breaks.push_back(s);
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  auto at = [&](const Rational& s) {
    Point x(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) x[i] = p[i] + s * (q[i] - p[i]);
    return f(x);
  };
  Rational total = 0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    total += (breaks[k + 1] - breaks[k]) * (at(breaks[k]) + at(breaks[k + 1])) / 2;
  }
  return total;
}

void check_point(const Point& p, std::size_t dim) {
  if (p.size() != dim) throw InputError("point has the wrong dimension");
}

}  // namespace

Polytope Polytope::hull(std::vector<Point> points) {
  if (points.empty()) throw InputError("polytope needs vertices");
  const std::size_t d = points[0].size();
  if (d != 1 && d != 2) throw InputError("only dimensions 1 and 2 are supported");
  for (const auto& p : points) check_point(p, d);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Polytope P;
  P.dim_ = static_cast<int>(d);
  if (d == 1) {
    if (points.size() < 2) throw InputError("degenerate polytope");
    P.vertices_ = {points.front(), points.back()};
    return P;
  }
  // Andrew's monotone chain, dropping collinear points.
  std::vector<Point> h(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
    h[k++] = points[i];
  }
  h.resize(k > 0 ? k - 1 : 0);
  if (h.size() < 3) throw InputError("degenerate polytope");
  P.vertices_ = std::move(h);
  return P;
}

Rational AffineFunction::operator()(const Point& x) const {
  Rational s = constant;
  for (std::size_t i = 0; i < gradient.size(); ++i) s += gradient[i] * x[i];
  return s;
}

PLFunction::PLFunction(const Polytope& P, std::vector<AffineFunction> pieces) {
  if (pieces.empty()) throw InputError("PL function needs at least one piece");
  std::vector<AffineFunction> unique;
  for (auto& l : pieces) {
    check_point(l.gradient, static_cast<std::size_t>(P.dim()));
    if (std::find(unique.begin(), unique.end(), l) == unique.end()) unique.push_back(std::move(l));
  }
  for (std::size_t j = 0; j < unique.size(); ++j) {
    if (measure(cell_of(P, unique, j)) > 0) pieces_.push_back(unique[j]);
  }
}

Rational PLFunction::operator()(const Point& x) const {
  Rational best = pieces_[0](x);
  for (std::size_t i = 1; i < pieces_.size(); ++i) best = std::max(best, pieces_[i](x));
  return best;
}

Rational lattice_length(const Point& p, const Point& q) {
  Integer den = 1;
  std::vector<Rational> d;
  for (std::size_t i = 0; i < p.size(); ++i) {
    d.push_back(q[i] - p[i]);
    den = lcm(den, Integer(d.back().get_den()));
  }
  Integer g = 0;
  for (const auto& x : d) g = gcd(g, Integer(x.get_num() * (den / x.get_den())));
  if (g == 0) throw InputError("degenerate segment");
  return Rational(g) / Rational(den);
}

HilbCoeffs toric_hilb(const Polytope& P) {
  const auto& v = P.vertices();
  if (P.dim() == 1) return {v[1][0] - v[0][0], 1};
  Rational sigma = 0;
  for (std::size_t i = 0; i < v.size(); ++i) sigma += lattice_length(v[i], v[(i + 1) % v.size()]);
  return {polygon_area(v), sigma / 2};
}

ToricIntegrals toric_integrals(const Polytope& P, const PLFunction& f) {
  ToricIntegrals out;
  const auto hc = toric_hilb(P);
  out.volume = hc.a0;
  out.boundary_measure = 2 * hc.a1;
  const auto& v = P.vertices();
  const auto& pieces = f.pieces();
  bool first = true;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    auto cell = cell_of(P, pieces, j);
    out.integral += integrate(cell, pieces[j]);
    for (const auto& x : cell) {
      Rational fx = f(x);
      if (first || fx < out.minimum) out.minimum = fx;
      first = false;
    }
  }
  if (P.dim() == 1) {
    out.boundary_integral = f(v[0]) + f(v[1]);
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point& a = v[i];
      const Point& b = v[(i + 1) % v.size()];
      out.boundary_integral += lattice_length(a, b) * segment_average(f, a, b);
    }
  }
  return out;
}

ModelNumbers toric_model_numbers(const Polytope& P, const PLFunction& f) {
  auto in = toric_integrals(P, f);
  ModelNumbers b;
  b.b0 = -in.integral;
  b.b1 = -in.boundary_integral / 2;
  b.n = P.dim();
  return b;
}

Rational toric_df(const Polytope& P, const PLFunction& f) {
  return df_invariant(toric_hilb(P), toric_model_numbers(P, f));
}

Rational toric_minnorm(const Polytope& P, const PLFunction& f) {
  auto in = toric_integrals(P, f);
  return in.integral / in.volume - in.minimum;
}

namespace {

AffineFunction crease_piece(const Crease& c) { return {c.normal, -c.offset}; }

PLFunction crease_function(const Polytope& P, const Crease& c) {
  return PLFunction(P, {{Point(static_cast<std::size_t>(P.dim()), 0), 0}, crease_piece(c)});
}

bool inside(const Polytope& P, const Point& x) {
  const auto& v = P.vertices();
  if (P.dim() == 1) return v[0][0] <= x[0] && x[0] <= v[1][0];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cross(v[i], v[(i + 1) % v.size()], x) < 0) return false;
  }
  return true;
}

// Points where some combination of creases can attain its minimum on P.
std::vector<Point> arrangement_vertices(const Polytope& P, const std::vector<Crease>& creases) {
  std::vector<Point> out = P.vertices();
  auto add = [&](Point p) {
    if (inside(P, p) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  };
  if (P.dim() == 1) {
    for (const auto& c : creases) add({c.offset / c.normal[0]});
    return out;
  }
  const auto& v = P.vertices();
  for (const auto& c : creases) {
    auto l = crease_piece(c);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point& a = v[i];
      const Point& b = v[(i + 1) % v.size()];
      Rational la = l(a), lb = l(b);
      if (la == lb) continue;
      Rational s = la / (la - lb);
      if (s >= 0 && s <= 1) add({a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])});
    }
  }
  for (std::size_t i = 0; i < creases.size(); ++i) {
    for (std::size_t j = i + 1; j < creases.size(); ++j) {
      const auto& n1 = creases[i].normal;
      const auto& n2 = creases[j].normal;
      Rational det = n1[0] * n2[1] - n1[1] * n2[0];
      if (det == 0) continue;
      const auto& o1 = creases[i].offset;
      const auto& o2 = creases[j].offset;
      add({(o1 * n2[1] - o2 * n1[1]) / det, (n1[0] * o2 - n2[0] * o1) / det});
    }
  }
  return out;
}

}  // namespace

UniformResult toric_uniform_search(const Polytope& P, const std::vector<Crease>& creases, const Rational& epsilon,
                                   Budget& budget) {
  const std::size_t n = static_cast<std::size_t>(P.dim());
  for (const auto& c : creases) {
    check_point(c.normal, n);
    if (std::all_of(c.normal.begin(), c.normal.end(), [](const Rational& x) { return x == 0; })) {
      throw InputError("crease normal must be nonzero");
    }
    auto l = crease_piece(c);
    bool below = false, above = false;
    for (const auto& v : P.vertices()) {
      below = below || l(v) < 0;
      above = above || l(v) > 0;
    }
    if (!below || !above) throw InputError("crease does not cut the polytope");
  }
  if (creases.size() > 12) throw InputError("at most 12 creases are supported");

  const std::size_t nvar = n + creases.size();
  // Family generators: coordinate functions, then crease functions.
  std::vector<PLFunction> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, 0);
    e[i] = 1;
    gens.emplace_back(P, std::vector<AffineFunction>{{e, 0}});
  }
  for (const auto& c : creases) gens.push_back(crease_function(P, c));
  std::vector<Rational> df(nvar), mean(nvar);
  const Rational vol = toric_hilb(P).a0;
  for (std::size_t k = 0; k < nvar; ++k) {
    df[k] = toric_df(P, gens[k]);
    mean[k] = toric_integrals(P, gens[k]).integral / vol;
  }

  const auto candidates = arrangement_vertices(P, creases);
  std::optional<lp::Solution> best;
  for (const auto& q : candidates) {
    lp::Problem prob(nvar);
    for (std::size_t i = 0; i < n; ++i) prob.free[i] = true;
    prob.objective = df;
    std::vector<Rational> norm(nvar);
    for (std::size_t k = 0; k < nvar; ++k) norm[k] = mean[k] - gens[k](q);
    prob.add(std::move(norm), lp::Sense::Equal, 1);
    for (const auto& other : candidates) {
      if (other == q) continue;
      std::vector<Rational> row(nvar);
      for (std::size_t k = 0; k < nvar; ++k) row[k] = gens[k](other) - gens[k](q);
      prob.add(std::move(row), lp::Sense::GreaterEq, 0);
    }
    auto sol = lp::solve(prob, budget);
    if (sol.status == lp::Status::Unbounded) throw std::logic_error("uniform search LP is unbounded");
    if (sol.status != lp::Status::Optimal) continue;
    if (!best || sol.value < best->value) best = std::move(sol);
  }
  if (!best) throw InputError("empty family: no normalized function in the span of the creases");

  UniformResult out;
  out.minimum = best->value - epsilon;
  out.fails = out.minimum < 0;
  out.coefficients = best->x;

  // Σ λ_c max(0, ℓ_c) is the max over subsets of the active creases.
  std::vector<std::size_t> active;
  for (std::size_t c = 0; c < creases.size(); ++c) {
    if (best->x[n + c] != 0) active.push_back(c);
  }
  std::vector<AffineFunction> pieces;
  for (std::uint32_t mask = 0; mask < (1u << active.size()); ++mask) {
    AffineFunction l{Point(best->x.begin(), best->x.begin() + static_cast<std::ptrdiff_t>(n)), 0};
    for (std::size_t b = 0; b < active.size(); ++b) {
      if (!((mask >> b) & 1)) continue;
      const Rational& lam = best->x[n + active[b]];
      auto cp = crease_piece(creases[active[b]]);
      for (std::size_t i = 0; i < n; ++i) l.gradient[i] += lam * cp.gradient[i];
      l.constant += lam * cp.constant;
    }
    pieces.push_back(std::move(l));
  }
  // Scale so that all gradients are integers with no common factor.
  Integer gden = 1;
  for (const auto& l : pieces) {
    for (const auto& g : l.gradient) gden = lcm(gden, Integer(g.get_den()));
  }
  Integer g = 0;
  for (const auto& l : pieces) {
    for (const auto& x : l.gradient) g = gcd(g, Integer(x.get_num() * (gden / x.get_den())));
  }
  const Rational scale = g == 0 ? Rational(1) : Rational(gden) / Rational(g);
  for (auto& l : pieces) {
    for (auto& x : l.gradient) x *= scale;
    l.constant *= scale;
  }
  PLFunction cert(P, std::move(pieces));
  out.certificate_df = toric_df(P, cert);
  out.certificate_minnorm = toric_minnorm(P, cert);
  if (out.certificate_df != scale * best->value || out.certificate_minnorm != scale ||
      ((out.certificate_df - epsilon * out.certificate_minnorm) < 0) != out.fails) {
    throw std::logic_error("uniform search certificate failed re-verification");
  }
  out.certificate = std::move(cert);
  return out;
}

}  // namespace arcstab
