#include "arcstab/sampling.hpp"

#include <algorithm>
#include <random>

namespace arcstab {

std::vector<Pair> fixed_torus_pairs() {
  std::mt19937_64 rng(0xa7);
  auto t2 = GroupPresentation::torus(2);
  std::vector<Pair> out;
  while (out.size() < 10) {
    auto weights = [&](std::size_t n) {
      std::vector<Weight> w(n);
      for (auto& x : w) x = {draw(rng, -2, 2), draw(rng, -2, 2)};
      return w;
    };
    auto vw = weights(static_cast<std::size_t>(draw(rng, 2, 4)));
    auto ww = weights(static_cast<std::size_t>(draw(rng, 1, 2)));
    std::vector<Rational> v(vw.size()), w(ww.size());
    for (auto& c : v) c = make_rational(draw(rng, -2, 2));
    for (auto& c : w) c = make_rational(draw(rng, -1, 1));
    if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; })) v[0] = 1;
    out.emplace_back(t2, Representation::torus_weights(vw), Representation::torus_weights(ww), v, w);
  }
  return out;
}

ReductionSample torus_reduction_sample(const std::vector<Pair>& pairs, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ReductionSample out;
  std::vector<std::pair<Representation, Representation>> as_matrix;
  for (const auto& p : pairs) {
    as_matrix.emplace_back(torus_as_matrix(p.V, p.group), torus_as_matrix(p.W, p.group));
  }
  for (std::size_t k = 0; k < count; ++k) {
    const auto& group = pairs[k % pairs.size()].group;
    Arc rho = random_torus_arc(rng, group.size());
    ++out.arcs;
    Arc ops = Arc::one_parameter_subgroup(torus_arc_exponents(rho));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].group.size() != group.size()) continue;
      const auto& p = pairs[i];
      ++out.comparisons;
      out.agree += mu_weight(as_matrix[i].first, as_matrix[i].second, p.v, p.w, rho) ==
                   mu_weight(p.V, p.W, p.v, p.w, ops);
    }
  }
  return out;
}

NormSample norm_sample(std::size_t count, std::uint64_t seed) {
  auto gl2 = GroupPresentation::general_linear(2);
  std::vector<Representation> reps;
  for (unsigned d = 1; d <= 4; ++d) reps.push_back(sym_power(gl2, d));
  std::mt19937_64 rng(seed);
  NormSample out;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& V = reps[k % reps.size()];
    std::vector<Rational> v(V.dim());
    for (auto& c : v) c = make_rational(draw(rng, -2, 2));
    if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; })) v[0] = 1;
    Arc rho = Arc::identity(2);
    switch (k % 3) {
      case 0:
        rho = random_torus_arc(rng, 2);
        break;
      case 1:
        rho = random_group_arc(rng, gl2);
        break;
      default:
        rho = random_integral_unit(rng, 2);
        break;
    }
    ++out.arcs;
    const auto norm = arc_norm(V, v, rho);
    out.nonnegative += norm >= 0;
    if (arcs_equivalent(rho, Arc::identity(2))) {
      ++out.equivalent_to_identity;
      out.zero_on_identity_class += norm == 0;
    }
  }
  return out;
}

}  // namespace arcstab
