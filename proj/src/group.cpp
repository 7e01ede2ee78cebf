#include "arcstab/group.hpp"

#include <algorithm>

namespace arcstab {

namespace {

std::string entry_var(std::size_t m, std::size_t i, std::size_t j) {
  if (m <= 9) return "g" + std::to_string(i + 1) + std::to_string(j + 1);
  return "g" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

GroupPresentation::GroupPresentation(GroupKind kind, std::size_t m) : kind_(kind), m_(m), ideal_(VarList{}) {
  if (m == 0) throw InputError("group matrix size must be positive");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) vars_.push_back(entry_var(m, i, j));
  }
  vars_.push_back("ginv");
}

void GroupPresentation::finish(std::vector<MultiPoly> relations) {
  relations.push_back(inverse_det() * determinant() - MultiPoly::constant(vars_, 1));
  ideal_ = Ideal(vars_, std::move(relations));
}

MultiPoly GroupPresentation::determinant() const {
  // Leibniz expansion over permutations; m is small.
  std::vector<std::size_t> perm(m_);
  for (std::size_t i = 0; i < m_; ++i) perm[i] = i;
  MultiPoly det(vars_);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    MultiPoly term = MultiPoly::constant(vars_, inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < m_; ++i) term *= entry(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

GroupPresentation GroupPresentation::torus(std::size_t k) {
  GroupPresentation g(GroupKind::Torus, k);
  std::vector<MultiPoly> rel;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) rel.push_back(g.entry(i, j));
    }
  }
  g.finish(std::move(rel));
  return g;
}

GroupPresentation GroupPresentation::special_linear(std::size_t m) {
  GroupPresentation g(GroupKind::SpecialLinear, m);
  g.finish({g.determinant() - MultiPoly::constant(g.vars_, 1)});
  return g;
}

GroupPresentation GroupPresentation::general_linear(std::size_t m) {
  GroupPresentation g(GroupKind::GeneralLinear, m);
  g.finish({});
  return g;
}

GroupPresentation GroupPresentation::custom(std::size_t m, std::vector<MultiPoly> relations) {
  GroupPresentation g(GroupKind::Custom, m);
  for (auto& r : relations) r = r.in_ring(g.vars_);
  g.finish(std::move(relations));
  return g;
}

std::string GroupPresentation::label() const {
  switch (kind_) {
    case GroupKind::Torus:
      return "torus(" + std::to_string(m_) + ")";
    case GroupKind::SpecialLinear:
      return "SL(" + std::to_string(m_) + ")";
    case GroupKind::GeneralLinear:
      return "GL(" + std::to_string(m_) + ")";
    case GroupKind::Custom:
      return "custom(" + std::to_string(m_) + ")";
  }
  return "";
}

Rational determinant(const RationalMatrix& a) {
  // Fraction-free enough at these sizes: plain Gaussian elimination over Q.
  RationalMatrix m = a;
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.size(), std::vector<Rational>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < out[i].size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

std::vector<Rational> GroupPresentation::coordinates(const RationalMatrix& g) const {
  if (g.size() != m_) throw InputError("group element has the wrong size");
  std::vector<Rational> coords;
  for (const auto& row : g) {
    if (row.size() != m_) throw InputError("group element is not square");
    coords.insert(coords.end(), row.begin(), row.end());
  }
  Rational det = arcstab::determinant(g);
  if (det == 0) throw InputError("group element is singular");
  coords.push_back(1 / det);
  return coords;
}

bool GroupPresentation::contains(const RationalMatrix& g) const {
  if (arcstab::determinant(g) == 0) return false;
  return ideal_.vanishes_at(coordinates(g));
}

RationalMatrix GroupPresentation::sample_point(std::mt19937_64& rng) const {
  RationalMatrix g(m_, std::vector<Rational>(m_, 0));
  auto nonzero = [&]() {
    std::int64_t v = draw(rng, 1, 3);
    return make_rational(draw(rng, 0, 1) == 0 ? v : -v, draw(rng, 1, 2));
  };
  switch (kind_) {
    case GroupKind::Torus:
      for (std::size_t i = 0; i < m_; ++i) g[i][i] = nonzero();
      return g;
    case GroupKind::GeneralLinear:
      do {
        for (auto& row : g) {
          for (auto& v : row) v = make_rational(draw(rng, -3, 3), draw(rng, 1, 2));
        }
      } while (arcstab::determinant(g) == 0);
      return g;
    case GroupKind::SpecialLinear: {
      for (std::size_t i = 0; i < m_; ++i) g[i][i] = 1;
      for (int k = 0; k < 3 && m_ > 1; ++k) {
        auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(m_) - 1));
        auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(m_) - 2));
        if (j >= i) ++j;
        RationalMatrix e(m_, std::vector<Rational>(m_, 0));
        for (std::size_t d = 0; d < m_; ++d) e[d][d] = 1;
        e[i][j] = make_rational(draw(rng, -2, 2), draw(rng, 1, 2));
        g = multiply(g, e);
      }
      return g;
    }
    case GroupKind::Custom:
      break;
  }
  throw InputError("cannot sample points of a custom group");
}

}  // namespace arcstab
