#include <algorithm>
#include <set>
#include <utility>

#include "arcstab/ideal.hpp"

namespace arcstab {

namespace {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Terms kept in increasing order, so the leading term is back().
using Sparse = std::vector<Term>;

Sparse to_sparse(const MultiPoly& f, const MonomialOrder& order) {
  Sparse s;
  s.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) s.push_back({m, c});
  std::sort(s.begin(), s.end(), [&](const Term& a, const Term& b) { return order.less(a.mono, b.mono); });
  return s;
}

MultiPoly from_sparse(const Sparse& s, const VarList& vars) {
  MultiPoly f(vars);
  for (const auto& t : s) f.add_term(t.mono, t.coeff);
  return f;
}

// p - c * x^shift * g
Sparse sub_multiple(const Sparse& p, const Rational& c, const Monomial& shift, const Sparse& g,
                    const MonomialOrder& order) {
  Sparse out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = product(g[j].mono, shift);
    if (i == p.size()) {
      out.push_back({std::move(gm), -c * g[j].coeff});
      ++j;
      continue;
    }
    auto cmp = order.compare(p[i].mono, gm);
    if (cmp < 0) {
      out.push_back(p[i++]);
    } else if (cmp > 0) {
      out.push_back({std::move(gm), -c * g[j].coeff});
      ++j;
    } else {
      Rational v = p[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back({std::move(gm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Sparse& s) {
  if (s.empty()) return;
  Rational lc = s.back().coeff;
  if (lc == 1) return;
  for (auto& t : s) t.coeff /= lc;
}

Sparse reduce_full(Sparse p, const std::vector<const Sparse*>& basis, const MonomialOrder& order) {
  Sparse remainder;  // collected in decreasing order
  while (!p.empty()) {
    const Term& lead = p.back();
    const Sparse* divisor = nullptr;
    for (const Sparse* g : basis) {
      if (!g->empty() && divides(g->back().mono, lead.mono)) {
        divisor = g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      p.pop_back();
      continue;
    }
    Rational c = lead.coeff / divisor->back().coeff;
    Monomial shift = quotient(lead.mono, divisor->back().mono);
    p = sub_multiple(p, c, shift, *divisor, order);
  }
  std::reverse(remainder.begin(), remainder.end());
  return remainder;
}

Sparse spoly(const Sparse& f, const Sparse& g, const MonomialOrder& order) {
  Monomial l = lcm(f.back().mono, g.back().mono);
  Sparse sf = sub_multiple(Sparse{}, Rational(-1) / f.back().coeff, quotient(l, f.back().mono), f, order);
  return sub_multiple(sf, 1 / g.back().coeff, quotient(l, g.back().mono), g, order);
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::vector<Sparse> buchberger(std::vector<Sparse> input, const MonomialOrder& order, Budget& budget) {
  std::vector<Sparse> basis;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Sparse h) {
    make_monic(h);
    basis.push_back(std::move(h));
    std::size_t n = basis.size() - 1;
    for (std::size_t i = 0; i < n; ++i) pending.emplace(i, n);
  };

  for (auto& f : input) {
    if (f.empty()) continue;
    add(std::move(f));
  }

  while (!pending.empty()) {
    // Normal strategy: smallest lcm first, ties by index.
    auto best = pending.begin();
    Monomial best_lcm = lcm(basis[best->first].back().mono, basis[best->second].back().mono);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm(basis[it->first].back().mono, basis[it->second].back().mono);
      if (order.less(l, best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = basis[i].back().mono;
    const Monomial& lj = basis[j].back().mono;
    if (coprime(li, lj)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!divides(basis[k].back().mono, best_lcm)) continue;
      auto pik = std::minmax(i, k);
      auto pjk = std::minmax(j, k);
      if (!pending.contains({pik.first, pik.second}) && !pending.contains({pjk.first, pjk.second})) {
        chain = true;
      }
    }
    if (chain) continue;

    budget.step("Groebner basis computation");
    std::vector<const Sparse*> refs;
    refs.reserve(basis.size());
    for (const auto& g : basis) refs.push_back(&g);
    Sparse h = reduce_full(spoly(basis[i], basis[j], order), refs, order);
    if (!h.empty()) add(std::move(h));
  }
  return basis;
}

std::vector<Sparse> reduce_basis(std::vector<Sparse> basis, const MonomialOrder& order) {
  std::vector<Sparse> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lj = basis[j].back().mono;
      const Monomial& li = basis[i].back().mono;
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Sparse> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Sparse*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(&minimal[j]);
    }
    Sparse r = reduce_full(minimal[i], others, order);
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Sparse& a, const Sparse& b) { return order.less(a.back().mono, b.back().mono); });
  return reduced;
}

}  // namespace

Ideal::Ideal(VarList vars, std::vector<MultiPoly> generators) : vars_(std::move(vars)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.vars() != vars_) throw InputError("generator does not live in the ambient ring");
    generators_.push_back(std::move(g));
  }
}

bool Ideal::vanishes_at(std::span<const Rational> point) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const MultiPoly& g) { return g.evaluate(point) == 0; });
}

Ideal Ideal::in_ring(const VarList& target) const {
  std::vector<MultiPoly> gens;
  for (const auto& g : generators_) gens.push_back(g.in_ring(target));
  return Ideal(target, std::move(gens));
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  if (a.vars() != b.vars()) throw InputError("ideal sum across different rings");
  std::vector<MultiPoly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.vars(), std::move(gens));
}

Ideal groebner(const Ideal& ideal, const MonomialOrder& order, Budget& budget) {
  order.validate(ideal.vars().size());
  std::vector<Sparse> input;
  for (const auto& g : ideal.generators()) input.push_back(to_sparse(g, order));
  auto basis = reduce_basis(buchberger(std::move(input), order, budget), order);
  std::vector<MultiPoly> gens;
  for (const auto& s : basis) gens.push_back(from_sparse(s, ideal.vars()));
  return Ideal(ideal.vars(), std::move(gens));
}

Ideal groebner(const Ideal& ideal, const MonomialOrder& order) {
  Budget budget;
  return groebner(ideal, order, budget);
}

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis, const MonomialOrder& order) {
  std::vector<Sparse> sb;
  for (const auto& g : basis) {
    if (g.vars() != f.vars()) throw InputError("normal form across different rings");
    sb.push_back(to_sparse(g, order));
  }
  std::vector<const Sparse*> refs;
  for (const auto& s : sb) refs.push_back(&s);
  return from_sparse(reduce_full(to_sparse(f, order), refs, order), f.vars());
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  return from_sparse(spoly(to_sparse(f, order), to_sparse(g, order), order), f.vars());
}

bool is_groebner_basis(std::span<const MultiPoly> basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
    }
  }
  return true;
}

Ideal eliminate(const Ideal& ideal, const VarList& drop, Budget& budget) {
  for (const auto& d : drop) {
    if (std::find(ideal.vars().begin(), ideal.vars().end(), d) == ideal.vars().end()) {
      throw InputError("cannot eliminate unknown variable '" + d + "'");
    }
  }
  VarList kept;
  for (const auto& v : ideal.vars()) {
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) kept.push_back(v);
  }
  VarList first;
  for (const auto& v : ideal.vars()) {
    if (std::find(drop.begin(), drop.end(), v) != drop.end()) first.push_back(v);
  }
  VarList reordered = first;
  reordered.insert(reordered.end(), kept.begin(), kept.end());

  Ideal gb = groebner(ideal.in_ring(reordered), MonomialOrder::block(first.size()), budget);
  std::vector<MultiPoly> out;
  for (const auto& g : gb.generators()) {
    bool uses_dropped = false;
    for (std::size_t i = 0; i < first.size(); ++i) uses_dropped = uses_dropped || g.involves(i);
    if (!uses_dropped) out.push_back(g.in_ring(kept));
  }
  return Ideal(kept, std::move(out));
}

Ideal eliminate(const Ideal& ideal, const VarList& drop) {
  Budget budget;
  return eliminate(ideal, drop, budget);
}

std::string fresh_variable(const VarList& vars, const std::string& stem) {
  std::string name = stem;
  for (int k = 0; std::find(vars.begin(), vars.end(), name) != vars.end(); ++k) {
    name = stem + "_" + std::to_string(k);
  }
  return name;
}

Ideal saturate(const Ideal& ideal, const MultiPoly& f, Budget& budget) {
  if (f.is_zero()) throw InputError("cannot saturate by the zero polynomial");
  const VarList& vars = ideal.vars();
  std::string z = fresh_variable(vars, "sat");
  VarList ext = vars;
  ext.push_back(z);
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ext));
  gens.push_back(MultiPoly::constant(ext, 1) - MultiPoly::variable(ext, z) * f.in_ring(ext));
  return eliminate(Ideal(ext, std::move(gens)), {z}, budget);
}

Ideal saturate(const Ideal& ideal, const MultiPoly& f) {
  Budget budget;
  return saturate(ideal, f, budget);
}

Ideal intersect(const Ideal& a, const Ideal& b, Budget& budget) {
  if (a.vars() != b.vars()) throw InputError("ideal intersection across different rings");
  std::string t = fresh_variable(a.vars(), "isect");
  VarList ext = a.vars();
  ext.push_back(t);
  MultiPoly tv = MultiPoly::variable(ext, t);
  MultiPoly one_minus_t = MultiPoly::constant(ext, 1) - tv;
  std::vector<MultiPoly> gens;
  for (const auto& g : a.generators()) gens.push_back(tv * g.in_ring(ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.in_ring(ext));
  return eliminate(Ideal(ext, std::move(gens)), {t}, budget);
}

Ideal saturate(const Ideal& ideal, const Ideal& by, Budget& budget) {
  if (by.has_no_generators()) return Ideal::unit(ideal.vars());
  std::optional<Ideal> acc;
  for (const auto& f : by.generators()) {
    Ideal s = saturate(ideal, f.in_ring(ideal.vars()), budget);
    acc = acc ? intersect(*acc, s, budget) : s;
  }
  return groebner(*acc, MonomialOrder::grevlex(), budget);
}

bool member(const MultiPoly& f, const Ideal& ideal, Budget& budget) {
  if (f.vars() != ideal.vars()) throw InputError("membership test across different rings");
  Ideal gb = groebner(ideal, MonomialOrder::grevlex(), budget);
  return normal_form(f, gb.generators(), MonomialOrder::grevlex()).is_zero();
}

bool member(const MultiPoly& f, const Ideal& ideal) {
  Budget budget;
  return member(f, ideal, budget);
}

bool contains(const Ideal& a, const Ideal& b, Budget& budget) {
  Ideal gb = groebner(a, MonomialOrder::grevlex(), budget);
  return std::all_of(b.generators().begin(), b.generators().end(), [&](const MultiPoly& f) {
    return normal_form(f.in_ring(a.vars()), gb.generators(), MonomialOrder::grevlex()).is_zero();
  });
}

bool same_ideal(const Ideal& a, const Ideal& b, Budget& budget) {
  if (a.vars() != b.vars()) return false;
  return groebner(a, MonomialOrder::grevlex(), budget) == groebner(b, MonomialOrder::grevlex(), budget);
}

bool is_unit_ideal(const Ideal& ideal, Budget& budget) {
  Ideal gb = groebner(ideal, MonomialOrder::grevlex(), budget);
  return gb.generators().size() == 1 && gb.generators()[0].is_constant();
}

std::vector<std::string> generator_strings(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.generators()) out.push_back(to_string(g));
  return out;
}

}  // namespace arcstab
