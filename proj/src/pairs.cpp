#include "arcstab/pairs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "arcstab/lp.hpp"

namespace arcstab {

Pair::Pair(GroupPresentation group_, Representation V_, Representation W_, std::vector<Rational> v_,
           std::vector<Rational> w_)
    : group(std::move(group_)), V(std::move(V_)), W(std::move(W_)), v(std::move(v_)), w(std::move(w_)) {
  if (v.size() != V.dim()) throw InputError("v has the wrong dimension");
  if (w.size() != W.dim()) throw InputError("w has the wrong dimension");
  if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; })) {
    throw InputError("v must be nonzero");
  }
}

bool Pair::w_is_zero() const {
  return std::all_of(w.begin(), w.end(), [](const Rational& c) { return c == 0; });
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Semistable:
      return "semistable";
    case VerdictStatus::Unstable:
      return "unstable";
    case VerdictStatus::StableAt:
      return "stable-at-l";
    case VerdictStatus::NotStableAt:
      return "not-stable-at-l";
    case VerdictStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::set<Weight> support(const Representation& rep, std::span<const Rational> x) {
  if (!rep.is_torus()) throw InputError("support needs a torus-weight representation");
  std::set<Weight> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) out.insert(rep.weights()[i]);
  }
  return out;
}

std::vector<std::int64_t> primitive_integer_vector(std::span<const Rational> x) {
  Integer den = 1;
  for (const auto& q : x) den = lcm(den, Integer(q.get_den()));
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& q : x) {
    Integer n = q.get_num() * (den / q.get_den());
    g = gcd(g, n);
    ints.push_back(n);
  }
  std::vector<std::int64_t> out;
  for (auto& n : ints) {
    if (g != 0) n /= g;
    if (!n.fits_slong_p()) throw InputError("certificate exponent does not fit in 64 bits");
    out.push_back(n.get_si());
  }
  return out;
}

namespace {

std::size_t torus_rank(const Pair& p) {
  if (p.group.kind() != GroupKind::Torus) {
    throw InputError("exact certification needs a torus group, got " + p.group.label());
  }
  if (!p.V.is_torus() || !p.W.is_torus()) throw InputError("torus certification needs weight representations");
  const std::size_t k = p.group.size();
  for (const auto* rep : {&p.V, &p.W}) {
    if (rep->weights()[0].size() != k) throw InputError("weight rank does not match " + p.group.label());
  }
  return k;
}

std::optional<ContainmentWitness> hull_containment(const std::vector<Weight>& hull, const Weight& point,
                                                   Budget& budget) {
  const std::size_t n = hull.size();
  lp::Problem prob(n);
  prob.add(std::vector<Rational>(n, 1), lp::Sense::Equal, 1);
  for (std::size_t c = 0; c < point.size(); ++c) {
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = make_rational(hull[i][c]);
    prob.add(std::move(row), lp::Sense::Equal, make_rational(point[c]));
  }
  auto sol = lp::solve(prob, budget);
  if (sol.status != lp::Status::Optimal) return std::nullopt;
  ContainmentWitness wit{point, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (sol.x[i] != 0) wit.combination.emplace_back(hull[i], sol.x[i]);
  }
  return wit;
}

// Exponents a with <a, point> < min over hull of <a, χ>, normalized to the box.
std::vector<Rational> separating_direction(const std::vector<Weight>& hull, const Weight& point, Budget& budget) {
  const std::size_t k = point.size();
  lp::Problem prob(k + 1);
  for (std::size_t j = 0; j <= k; ++j) prob.free[j] = true;
  prob.minimize = false;
  prob.objective[k] = 1;
  for (const auto& chi : hull) {
    std::vector<Rational> row(k + 1);
    for (std::size_t j = 0; j < k; ++j) row[j] = make_rational(chi[j] - point[j]);
    row[k] = -1;
    prob.add(std::move(row), lp::Sense::GreaterEq, 0);
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> row(k + 1, 0);
    row[j] = 1;
    prob.add(row, lp::Sense::LessEq, 1);
    prob.add(row, lp::Sense::GreaterEq, -1);
  }
  auto sol = lp::solve(prob, budget);
  if (sol.status != lp::Status::Optimal || sol.value <= 0) {
    throw std::logic_error("no separating direction for a point outside the hull");
  }
  return {sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::set<Weight> minkowski(const std::set<Weight>& a, const std::set<Weight>& b) {
  std::set<Weight> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Weight s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      out.insert(std::move(s));
    }
  }
  return out;
}

std::set<Weight> fold_sum(const std::set<Weight>& s, std::int64_t times, std::size_t k) {
  std::set<Weight> acc = {Weight(k, 0)};
  for (std::int64_t i = 0; i < times; ++i) acc = minkowski(acc, s);
  return acc;
}

}  // namespace

Verdict torus_semistable(const Pair& p, Budget& budget) {
  torus_rank(p);
  Verdict out;
  if (p.w_is_zero()) {
    out.status = VerdictStatus::Semistable;
    out.mu = ExtInt::infinity();
    return out;
  }
  auto sv = support(p.V, p.v);
  std::vector<Weight> hull(sv.begin(), sv.end());
  for (const auto& chi : support(p.W, p.w)) {
    auto wit = hull_containment(hull, chi, budget);
    if (wit) {
      out.containment.push_back(std::move(*wit));
      continue;
    }
    auto a = primitive_integer_vector(separating_direction(hull, chi, budget));
    ExtInt mu = mu_weight(p.V, p.W, p.v, p.w, Arc::one_parameter_subgroup(a));
    if (mu >= ExtInt(0)) throw std::logic_error("separating one-parameter subgroup failed to destabilize");
    out.status = VerdictStatus::Unstable;
    out.exponents = std::move(a);
    out.mu = mu;
    out.containment.clear();
    return out;
  }
  out.status = VerdictStatus::Semistable;
  return out;
}

Pair associated_pair(const Pair& p, std::int64_t l) {
  if (l < 1) throw InputError("level must be a positive integer");
  const std::size_t k = torus_rank(p);
  const std::int64_t d = deg_of_rep(p.V, k);
  std::set<Weight> basis;
  for (std::size_t i = 0; i < k; ++i) {
    Weight e(k, 0);
    e[i] = 1;
    basis.insert(e);
  }
  std::set<Weight> vpart = minkowski(fold_sum(basis, d, k), fold_sum(support(p.V, p.v), l, k));
  std::vector<Weight> vw(vpart.begin(), vpart.end());
  std::vector<Rational> ones(vw.size(), 1);

  std::vector<Weight> ww;
  std::vector<Rational> wv;
  if (p.w_is_zero()) {
    Weight scaled = p.W.weights()[0];
    for (auto& c : scaled) c *= l + 1;
    ww.push_back(std::move(scaled));
    wv.push_back(0);
  } else {
    auto wpart = fold_sum(support(p.W, p.w), l + 1, k);
    ww.assign(wpart.begin(), wpart.end());
    wv.assign(ww.size(), 1);
  }
  return Pair(p.group, Representation::torus_weights(std::move(vw)), Representation::torus_weights(std::move(ww)),
              std::move(ones), std::move(wv));
}

Verdict torus_stable_at(const Pair& p, std::int64_t l, Budget& budget) {
  Pair assoc = associated_pair(p, l);
  Verdict out = torus_semistable(assoc, budget);
  out.level = l;
  if (out.status == VerdictStatus::Semistable) {
    out.status = VerdictStatus::StableAt;
    return out;
  }
  out.status = VerdictStatus::NotStableAt;
  // μ on the associated pair equals (l+1)μ + ‖ρ‖ on the original one.
  Arc rho = Arc::one_parameter_subgroup(*out.exponents);
  ExtInt mu = mu_weight(p.V, p.W, p.v, p.w, rho);
  std::int64_t norm = arc_norm(p.V, p.v, rho);
  if (mu.is_infinite() || (l + 1) * mu.value() + norm != out.mu->value()) {
    throw std::logic_error("associated pair weight disagrees with the level inequality");
  }
  out.mu = mu;
  out.norm = norm;
  return out;
}

Verdict dr_stable_at(const Pair& p, std::int64_t l, Budget& budget) {
  if (l < 1) throw InputError("level must be a positive integer");
  const std::size_t k = torus_rank(p);
  const std::int64_t d = deg_of_rep(p.V, k);
  Verdict out;
  out.level = l;
  if (p.w_is_zero()) {
    out.status = VerdictStatus::StableAt;
    out.mu = ExtInt::infinity();
    return out;
  }
  auto sv = support(p.V, p.v);
  auto sw = support(p.W, p.w);
  // On the cone where χv, χw and coordinate i attain the minima:
  // (l+1)(<a,χw> - <a,χv>) - (<a,χv> - d a_i) = (l+1)<a,χw> - (l+2)<a,χv> + d a_i.
  for (const auto& cv : sv) {
    for (const auto& cw : sw) {
      for (std::size_t i = 0; i < k; ++i) {
        lp::Problem prob(k);
        for (std::size_t j = 0; j < k; ++j) {
          prob.free[j] = true;
          prob.objective[j] = make_rational((l + 1) * cw[j] - (l + 2) * cv[j] + (j == i ? d : 0));
        }
        for (const auto& chi : sv) {
          std::vector<Rational> row(k);
          for (std::size_t j = 0; j < k; ++j) row[j] = make_rational(chi[j] - cv[j]);
          prob.add(std::move(row), lp::Sense::GreaterEq, 0);
        }
        for (const auto& chi : sw) {
          std::vector<Rational> row(k);
          for (std::size_t j = 0; j < k; ++j) row[j] = make_rational(chi[j] - cw[j]);
          prob.add(std::move(row), lp::Sense::GreaterEq, 0);
        }
        for (std::size_t j = 0; j < k; ++j) {
          std::vector<Rational> box(k, 0);
          box[j] = 1;
          prob.add(box, lp::Sense::LessEq, 1);
          prob.add(box, lp::Sense::GreaterEq, -1);
          if (j == i) continue;
          std::vector<Rational> row(k, 0);
          row[j] = 1;
          row[i] = -1;
          prob.add(std::move(row), lp::Sense::GreaterEq, 0);
        }
        auto sol = lp::solve(prob, budget);
        if (sol.status != lp::Status::Optimal || sol.value >= 0) continue;
        auto a = primitive_integer_vector(sol.x);
        Arc rho = Arc::one_parameter_subgroup(a);
        ExtInt mu = mu_weight(p.V, p.W, p.v, p.w, rho);
        std::int64_t norm = arc_norm(p.V, p.v, rho);
        if (mu.is_infinite() || (l + 1) * mu.value() >= norm) {
          throw std::logic_error("numerical stability witness failed re-verification");
        }
        out.status = VerdictStatus::NotStableAt;
        out.exponents = std::move(a);
        out.mu = mu;
        out.norm = norm;
        return out;
      }
    }
  }
  out.status = VerdictStatus::StableAt;
  return out;
}

FalsifierResult sample_falsifier(const Pair& p, std::size_t draws, std::uint64_t seed) {
  if (p.group.kind() == GroupKind::Custom) throw InputError("the falsifier supports torus, SL and GL groups only");
  FalsifierResult out;
  if (p.w_is_zero()) return out;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < draws; ++k) {
    Arc rho = random_group_arc(rng, p.group);
    ++out.draws;
    ExtInt mu = mu_weight(p.V, p.W, p.v, p.w, rho);
    if (mu >= ExtInt(0)) continue;
    if (!check_arc(p.group, rho) || mu_weight(p.V, p.W, p.v, p.w, rho) != mu) {
      throw std::logic_error("falsifier arc failed re-verification");
    }
    out.arc = std::move(rho);
    out.mu = mu;
    return out;
  }
  return out;
}

std::optional<std::int64_t> least_stable_level(const Pair& p, std::int64_t max_level, LevelCheck check,
                                               Budget& budget) {
  for (std::int64_t l = 1; l <= max_level; ++l) {
    Verdict v = check == LevelCheck::AssociatedPair ? torus_stable_at(p, l, budget) : dr_stable_at(p, l, budget);
    if (v.positive()) return l;
  }
  return std::nullopt;
}

}  // namespace arcstab

namespace arcstab {

namespace {

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    out.push_back(k);
    if (k * k != n) out.push_back(n / k);
  }
  return out;
}

// Quotient of p by (x - r) when r is a root; p is ascending.
std::optional<std::vector<Rational>> divide_root(const std::vector<Rational>& p, const Rational& r) {
  std::vector<Rational> q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  if (p[0] + carry * r != 0) return std::nullopt;
  return q;
}

}  // namespace

std::vector<FormRoot> rational_roots(std::span<const Rational> coeffs) {
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; })) {
    throw InputError("the zero form has no roots");
  }
  const std::size_t d = coeffs.size() - 1;
  std::vector<FormRoot> out;
  std::size_t top = d;
  while (coeffs[top] == 0) --top;
  if (top < d) out.push_back({1, 0, static_cast<unsigned>(d - top)});

  // Affine roots of p(x) = f(x, 1).
  std::vector<Rational> p(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(top + 1));
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  if (low > 0) {
    out.push_back({0, 1, static_cast<unsigned>(low)});
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (p.size() <= 1) return out;
  Integer den = 1;
  for (const auto& c : p) den = lcm(den, Integer(c.get_den()));
  const Integer c0 = p.front().get_num() * (den / p.front().get_den());
  const Integer cn = p.back().get_num() * (den / p.back().get_den());
  std::vector<Rational> candidates;
  for (const auto& u : divisors(c0)) {
    for (const auto& v : divisors(cn)) {
      Rational r(u, v);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    unsigned mult = 0;
    while (p.size() > 1) {
      auto q = divide_root(p, r);
      if (!q) break;
      p = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.push_back({r, 1, mult});
  }
  return out;
}

BinaryFormVerdict binary_form_stability(std::span<const Rational> coeffs, Budget& budget) {
  if (coeffs.size() < 2) throw InputError("binary form needs degree at least one");
  const std::size_t d = coeffs.size() - 1;
  auto sl2 = GroupPresentation::special_linear(2);
  auto t1 = GroupPresentation::torus(1);
  auto sym = sym_power(sl2, static_cast<unsigned>(d));
  std::vector<Weight> weights;
  for (std::size_t i = 0; i <= d; ++i) weights.push_back({2 * static_cast<std::int64_t>(i) - static_cast<std::int64_t>(d)});
  auto V = Representation::torus_weights(weights);
  auto W = Representation::torus_weights({{0}});

  BinaryFormVerdict out;
  out.status = VerdictStatus::Semistable;
  auto probe = [&](std::optional<FormRoot> root, std::vector<Rational> moved) {
    Verdict v = torus_semistable(Pair(t1, V, W, moved, {Rational(1)}), budget);
    if (v.status == VerdictStatus::Unstable) out.status = VerdictStatus::Unstable;
    out.probes.push_back({std::move(root), std::move(moved), std::move(v)});
  };
  probe(std::nullopt, {coeffs.begin(), coeffs.end()});
  for (const auto& r : rational_roots(coeffs)) {
    if (r.b == 0) continue;  // already at [1:0]
    // (b x - a y) ∘ g = -y for g = [[a, b], [-1/b, 0]].
    RationalMatrix g = {{r.a, r.b}, {-1 / r.b, 0}};
    auto m = sym.evaluate(sl2.coordinates(g));
    std::vector<Rational> moved(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = 0; j <= d; ++j) moved[i] += m[i][j] * coeffs[j];
    }
    probe(r, std::move(moved));
  }
  return out;
}

}  // namespace arcstab
