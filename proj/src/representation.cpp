#include "arcstab/representation.hpp"

#include <map>

namespace arcstab {

Representation Representation::torus_weights(std::vector<Weight> weights) {
  if (weights.empty()) throw InputError("representation has dimension zero");
  for (const auto& w : weights) {
    if (w.size() != weights[0].size()) throw InputError("torus weights have inconsistent ranks");
  }
  Representation r;
  r.kind_ = Kind::TorusWeights;
  r.weights_ = std::move(weights);
  return r;
}

Representation Representation::matrix_action(const GroupPresentation& group, PolyMatrix matrix) {
  if (matrix.empty()) throw InputError("representation has dimension zero");
  for (auto& row : matrix) {
    if (row.size() != matrix.size()) throw InputError("action matrix is not square");
    for (auto& e : row) e = e.in_ring(group.vars());
  }
  Representation r;
  r.kind_ = Kind::MatrixAction;
  r.matrix_ = std::move(matrix);
  if (group.can_sample()) {
    std::mt19937_64 rng(0x5eed);
    for (int k = 0; k < 3; ++k) {
      RationalMatrix g = group.sample_point(rng);
      RationalMatrix h = group.sample_point(rng);
      RationalMatrix lhs = r.evaluate(group.coordinates(multiply(g, h)));
      RationalMatrix rhs = multiply(r.evaluate(group.coordinates(g)), r.evaluate(group.coordinates(h)));
      if (lhs != rhs) throw InputError("action matrix is not a homomorphism on " + group.label());
    }
  }
  return r;
}

RationalMatrix Representation::evaluate(std::span<const Rational> coordinates) const {
  if (is_torus()) throw InputError("torus-weight representation has no action matrix");
  RationalMatrix out(matrix_.size(), std::vector<Rational>(matrix_.size()));
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    for (std::size_t j = 0; j < matrix_.size(); ++j) out[i][j] = matrix_[i][j].evaluate(coordinates);
  }
  return out;
}

Representation standard_representation(const GroupPresentation& group) {
  PolyMatrix m(group.size(), std::vector<MultiPoly>(group.size()));
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = 0; j < group.size(); ++j) m[i][j] = group.entry(i, j);
  }
  return Representation::matrix_action(group, std::move(m));
}

Representation trivial_representation(const GroupPresentation& group) {
  return Representation::matrix_action(group, {{MultiPoly::constant(group.vars(), 1)}});
}

Representation sym_power(const GroupPresentation& group, unsigned d) {
  if (group.size() != 2) throw InputError("Sym^d is defined here for 2x2 groups only");
  VarList ring = group.vars();
  std::string x = fresh_variable(ring, "x");
  ring.push_back(x);
  std::string y = fresh_variable(ring, "y");
  ring.push_back(y);
  auto lift = [&](const MultiPoly& p) { return p.in_ring(ring); };
  MultiPoly xv = MultiPoly::variable(ring, x);
  MultiPoly yv = MultiPoly::variable(ring, y);
  MultiPoly X = lift(group.entry(0, 0)) * xv + lift(group.entry(1, 0)) * yv;
  MultiPoly Y = lift(group.entry(0, 1)) * xv + lift(group.entry(1, 1)) * yv;

  const std::size_t n = d + 1;
  const std::size_t xi = ring.size() - 2;
  PolyMatrix m(n, std::vector<MultiPoly>(n, MultiPoly(group.vars())));
  for (unsigned j = 0; j <= d; ++j) {
    MultiPoly image = X.pow(j) * Y.pow(d - j);
    for (const auto& [mono, c] : image.terms()) {
      auto i = static_cast<std::size_t>(mono[xi]);
      Monomial g(mono.begin(), mono.begin() + static_cast<std::ptrdiff_t>(group.vars().size()));
      m[i][j].add_term(g, c);
    }
  }
  return Representation::matrix_action(group, std::move(m));
}

Representation torus_as_matrix(const Representation& rep, const GroupPresentation& group) {
  if (!rep.is_torus()) throw InputError("expected a torus-weight representation");
  const std::size_t k = group.size();
  PolyMatrix m(rep.dim(), std::vector<MultiPoly>(rep.dim(), MultiPoly(group.vars())));
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    const Weight& w = rep.weights()[i];
    if (w.size() != k) throw InputError("weight rank does not match the group size");
    // Π g_jj^{w_j} = ginv^N Π g_jj^{w_j + N} on the diagonal torus.
    std::int64_t shift = 0;
    for (auto e : w) shift = std::max(shift, -e);
    Monomial mono(group.vars().size(), 0);
    for (std::size_t j = 0; j < k; ++j) mono[j * k + j] = static_cast<std::int32_t>(w[j] + shift);
    mono.back() = static_cast<std::int32_t>(shift);
    m[i][i].add_term(mono, 1);
  }
  return Representation::matrix_action(group, std::move(m));
}

std::set<Weight> occurring_weights(const Representation& rep, std::size_t m) {
  std::set<Weight> out;
  if (rep.is_torus()) {
    for (const auto& w : rep.weights()) {
      if (w.size() != m) throw InputError("weight rank does not match the torus of GL(m)");
      out.insert(w);
    }
    return out;
  }
  // Restrict to diag(s_1..s_m): off-diagonal entries vanish and ginv = Π s_i^-1.
  const std::size_t nvars = rep.matrix()[0][0].vars().size();
  if (nvars != m * m + 1) throw InputError("action matrix does not match the group size");
  for (const auto& row : rep.matrix()) {
    for (const auto& entry : row) {
      std::map<Weight, Rational> acc;
      for (const auto& [mono, c] : entry.terms()) {
        bool off_diagonal = false;
        for (std::size_t i = 0; i < m && !off_diagonal; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            if (i != j && mono[i * m + j] != 0) off_diagonal = true;
          }
        }
        if (off_diagonal) continue;
        Weight w(m);
        for (std::size_t i = 0; i < m; ++i) w[i] = mono[i * m + i] - mono.back();
        acc[w] += c;
      }
      for (const auto& [w, c] : acc) {
        if (c != 0) out.insert(w);
      }
    }
  }
  return out;
}

}  // namespace arcstab
