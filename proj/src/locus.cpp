#include "arcstab/locus.hpp"

#include <algorithm>

namespace arcstab {

namespace {

VarList second_copy(const VarList& group_vars, const VarList& y1) {
  VarList taken = merge_vars(group_vars, y1);
  VarList out;
  for (const auto& v : y1) {
    out.push_back(fresh_variable(taken, v + "_2"));
    taken.push_back(out.back());
  }
  return out;
}

std::vector<MultiPoly> variables(const VarList& ring, const VarList& names) {
  std::vector<MultiPoly> out;
  for (const auto& n : names) out.push_back(MultiPoly::variable(ring, n));
  return out;
}

// A(g)·y for y given as polynomials in `ring`.
std::vector<MultiPoly> apply(const PolyMatrix& a, const std::vector<MultiPoly>& y, const VarList& ring) {
  std::vector<MultiPoly> out;
  for (const auto& row : a) {
    MultiPoly s(ring);
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j].in_ring(ring) * y[j];
    out.push_back(std::move(s));
  }
  return out;
}

// x ∈ span(z) on the cone: all 2×2 minors of [x z].
std::vector<MultiPoly> proportional(const std::vector<MultiPoly>& x, const std::vector<MultiPoly>& z) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) out.push_back(x[i] * z[j] - x[j] * z[i]);
  }
  return out;
}

Ideal irrelevant(const VarList& ring, const VarList& names) { return Ideal(ring, variables(ring, names)); }

Ideal reduced(const Ideal& i, Budget& budget) { return groebner(i, MonomialOrder::grevlex(), budget); }

Ideal renamed(const Ideal& i, const VarList& from, const VarList& to, const VarList& ring) {
  std::vector<MultiPoly> images;
  for (const auto& v : i.vars()) {
    auto it = std::find(from.begin(), from.end(), v);
    if (it == from.end()) throw InputError("ideal uses variable '" + v + "' outside the ambient coordinates");
    images.push_back(MultiPoly::variable(ring, to[static_cast<std::size_t>(it - from.begin())]));
  }
  std::vector<MultiPoly> gens;
  for (const auto& g : i.generators()) gens.push_back(images.empty() ? g.in_ring(ring) : g.substitute(images));
  return Ideal(ring, std::move(gens));
}

}  // namespace

ActionProblem::ActionProblem(GroupPresentation group_, VarList vars, PolyMatrix action_, Ideal Y_, Ideal W_hat_,
                             bool projective_, Budget& budget)
    : group(std::move(group_)),
      y1(std::move(vars)),
      y2(second_copy(group.vars(), y1)),
      action(std::move(action_)),
      Y(Y_.in_ring(y1)),
      W_hat(W_hat_.in_ring(y1)),
      projective(projective_) {
  for (const auto& v : y1) {
    if (std::find(group.vars().begin(), group.vars().end(), v) != group.vars().end()) {
      throw InputError("coordinate '" + v + "' clashes with a group variable");
    }
  }
  if (action.size() != y1.size()) throw InputError("action matrix size does not match the coordinates");
  for (auto& row : action) {
    if (row.size() != y1.size()) throw InputError("action matrix is not square");
    for (auto& e : row) e = e.in_ring(group.vars());
  }
  if (!contains(W_hat, Y, budget)) throw InputError("target is not contained in Y");
  if (projective) {
    for (const auto* i : {&Y, &W_hat}) {
      for (const auto& g : i->generators()) {
        if (!g.is_homogeneous()) throw InputError("projective problems need homogeneous ideals");
      }
    }
  }
}

PolyMatrix torus_action_matrix(const GroupPresentation& torus, const std::vector<Weight>& weights) {
  if (torus.kind() != GroupKind::Torus) throw InputError("weights need a torus group");
  const std::size_t k = torus.size();
  const VarList& ring = torus.vars();
  PolyMatrix m(weights.size(), std::vector<MultiPoly>(weights.size(), MultiPoly(ring)));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].size() != k) throw InputError("weight rank does not match the torus");
    MultiPoly e = MultiPoly::constant(ring, 1);
    for (std::size_t j = 0; j < k; ++j) {
      const auto w = weights[i][j];
      if (w >= 0) {
        e *= torus.entry(j, j).pow(static_cast<unsigned>(w));
        continue;
      }
      // s_j^{-1} = ginv · Π_{i≠j} s_i.
      MultiPoly inv = torus.inverse_det();
      for (std::size_t o = 0; o < k; ++o) {
        if (o != j) inv *= torus.entry(o, o);
      }
      e *= inv.pow(static_cast<unsigned>(-w));
    }
    m[i][i] = e;
  }
  return m;
}

Ideal graph_ideal(const ActionProblem& prob) {
  const VarList ring = merge_vars(merge_vars(prob.group.vars(), prob.y1), prob.y2);
  std::vector<MultiPoly> gens;
  for (const auto& r : prob.group.ideal().generators()) gens.push_back(r.in_ring(ring));
  for (const auto& r : prob.Y.generators()) gens.push_back(r.in_ring(ring));
  auto gy = apply(prob.action, variables(ring, prob.y1), ring);
  auto y2 = variables(ring, prob.y2);
  if (prob.projective) {
    for (auto& m : proportional(y2, gy)) gens.push_back(std::move(m));
  } else {
    for (std::size_t i = 0; i < y2.size(); ++i) gens.push_back(y2[i] - gy[i]);
  }
  return Ideal(ring, std::move(gens));
}

Ideal orbit_map_closure(const ActionProblem& prob, Budget& budget) {
  Ideal graph = graph_ideal(prob);
  graph = saturate(graph, prob.group.determinant().in_ring(graph.vars()), budget);
  Ideal z = eliminate(graph, prob.group.vars(), budget);
  if (prob.projective) {
    z = saturate(z, irrelevant(z.vars(), prob.y1), budget);
    z = saturate(z, irrelevant(z.vars(), prob.y2), budget);
  }
  return reduced(z, budget);
}

LocusReport degeneration_locus(const ActionProblem& prob, std::span<const std::vector<Rational>> probes,
                               Budget& budget) {
  Ideal z = orbit_map_closure(prob, budget);
  Ideal meet = z + renamed(prob.W_hat, prob.y1, prob.y2, z.vars());
  if (prob.projective) meet = saturate(meet, irrelevant(meet.vars(), prob.y2), budget);
  Ideal locus = eliminate(meet, prob.y2, budget).in_ring(prob.y1);
  if (prob.projective) locus = saturate(locus, irrelevant(prob.y1, prob.y1), budget);
  LocusReport report{reduced(locus, budget), {}, false, true};
  for (const auto& y : probes) {
    OracleRow row{y, point_degenerates(prob, y, budget), report.locus.vanishes_at(y)};
    report.overapproximation = report.overapproximation || (row.in_locus && !row.degenerates);
    report.sound = report.sound && (!row.degenerates || row.in_locus);
    report.oracle.push_back(std::move(row));
  }
  return report;
}

bool point_degenerates(const ActionProblem& prob, std::span<const Rational> y0, Budget& budget) {
  if (y0.size() != prob.y1.size()) throw InputError("point has the wrong dimension");
  if (!prob.Y.vanishes_at(y0)) throw InputError("point does not lie on Y");
  if (prob.projective && std::all_of(y0.begin(), y0.end(), [](const Rational& c) { return c == 0; })) {
    throw InputError("the zero vector is not a projective point");
  }
  const VarList ring = merge_vars(prob.group.vars(), prob.y2);
  std::vector<MultiPoly> gens;
  for (const auto& r : prob.group.ideal().generators()) gens.push_back(r.in_ring(ring));
  std::vector<MultiPoly> point;
  for (const auto& c : y0) point.push_back(MultiPoly::constant(ring, c));
  auto gy = apply(prob.action, point, ring);
  auto z = variables(ring, prob.y2);
  if (prob.projective) {
    for (auto& m : proportional(z, gy)) gens.push_back(std::move(m));
  } else {
    for (std::size_t i = 0; i < z.size(); ++i) gens.push_back(z[i] - gy[i]);
  }
  Ideal graph = saturate(Ideal(ring, std::move(gens)), prob.group.determinant().in_ring(ring), budget);
  Ideal closure = eliminate(graph, prob.group.vars(), budget);
  if (prob.projective) closure = saturate(closure, irrelevant(prob.y2, prob.y2), budget);
  Ideal meet = closure + renamed(prob.W_hat, prob.y1, prob.y2, prob.y2);
  if (prob.projective) meet = saturate(meet, irrelevant(prob.y2, prob.y2), budget);
  return !is_unit_ideal(meet, budget);
}

Pair PairFamily::fiber(std::span<const Rational> b) const {
  std::vector<Rational> vv, ww;
  for (const auto& f : v) vv.push_back(f.in_ring(base).evaluate(b));
  for (const auto& f : w) ww.push_back(f.in_ring(base).evaluate(b));
  return Pair(group, V, W, std::move(vv), std::move(ww));
}

bool FamilyLocus::contains(const PairFamily& fam, std::span<const Rational> b) const {
  std::vector<Rational> values;
  for (const auto& f : fam.v) values.push_back(f.in_ring(fam.base).evaluate(b));
  for (const auto& f : fam.w) values.push_back(f.in_ring(fam.base).evaluate(b));
  for (const auto& s : strata) {
    bool ok = std::all_of(s.vanishing.begin(), s.vanishing.end(), [&](std::size_t i) { return values[i] == 0; }) &&
              std::all_of(s.nonvanishing.begin(), s.nonvanishing.end(), [&](std::size_t i) { return values[i] != 0; });
    if (ok) return true;
  }
  return false;
}

FamilyLocus family_unstable_locus(const PairFamily& fam, Budget& budget) {
  if (fam.group.kind() != GroupKind::Torus) throw InputError("family loci are computed for torus groups only");
  if (fam.v.size() != fam.V.dim() || fam.w.size() != fam.W.dim()) {
    throw InputError("family coordinates do not match the representations");
  }
  std::vector<MultiPoly> coords;
  for (const auto& f : fam.v) coords.push_back(f.in_ring(fam.base));
  for (const auto& f : fam.w) coords.push_back(f.in_ring(fam.base));
  const std::size_t nv = fam.v.size();

  // Identically zero coordinates always vanish and nonzero constants never
  // do; only the rest are branched on.
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero() && !coords[i].is_constant()) free.push_back(i);
  }
  if (free.size() > 16) throw InputError("too many varying coordinates to stratify");

  FamilyLocus out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::vector<bool> nonzero(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) nonzero[i] = !coords[i].is_zero();
    for (std::size_t b = 0; b < free.size(); ++b) nonzero[free[b]] = (mask >> b) & 1;
    if (std::none_of(nonzero.begin(), nonzero.begin() + static_cast<std::ptrdiff_t>(nv), [](bool x) { return x; })) {
      continue;
    }
    UnstableStratum s{Ideal(fam.base), {}, {}};
    std::vector<MultiPoly> zero_gens;
    MultiPoly product = MultiPoly::constant(fam.base, 1);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (nonzero[i]) {
        s.nonvanishing.push_back(i);
        product *= coords[i];
      } else {
        s.vanishing.push_back(i);
        zero_gens.push_back(coords[i]);
      }
    }
    s.closure = reduced(saturate(Ideal(fam.base, zero_gens), product, budget), budget);
    if (is_unit_ideal(s.closure, budget)) continue;

    std::vector<Rational> v(nv), w(coords.size() - nv);
    for (std::size_t i = 0; i < nv; ++i) v[i] = nonzero[i] ? 1 : 0;
    for (std::size_t i = nv; i < coords.size(); ++i) w[i - nv] = nonzero[i] ? 1 : 0;
    if (torus_semistable(Pair(fam.group, fam.V, fam.W, v, w), budget).status == VerdictStatus::Unstable) {
      out.strata.push_back(std::move(s));
    }
  }
  // V(I) ⊆ V(J) exactly when J ⊆ rad I; ideal containment is a sufficient test.
  for (std::size_t i = 0; i < out.strata.size(); ++i) {
    const Ideal& a = out.strata[i].closure;
    bool redundant = false;
    for (std::size_t j = 0; j < out.strata.size() && !redundant; ++j) {
      if (i == j) continue;
      const Ideal& b = out.strata[j].closure;
      if (!contains(a, b, budget)) continue;
      // Keep the first of two equal ideals.
      redundant = !(contains(b, a, budget) && j > i);
    }
    if (!redundant) out.pieces.push_back(a);
  }
  return out;
}

}  // namespace arcstab
