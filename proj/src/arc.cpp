#include "arcstab/arc.hpp"

#include <algorithm>

namespace arcstab {

Arc::Arc(LaurentMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.empty()) throw InputError("arc matrix is empty");
  for (const auto& row : matrix_) {
    if (row.size() != matrix_.size()) throw InputError("arc matrix is not square");
  }
  det_ = determinant(matrix_);
  if (det_.is_zero()) throw InputError("arc matrix is not invertible over Q((t))");
}

Arc Arc::identity(std::size_t m) { return Arc(identity_matrix(m)); }

Arc Arc::one_parameter_subgroup(std::span<const std::int64_t> exponents) {
  LaurentMatrix m = identity_matrix(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m[i][i] = LaurentPoly::monomial(1, exponents[i]);
  return Arc(std::move(m));
}

bool Arc::is_diagonal() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j && !matrix_[i][j].is_zero()) return false;
    }
  }
  return true;
}

std::vector<LaurentPoly> Arc::entries() const {
  std::vector<LaurentPoly> out;
  for (const auto& row : matrix_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

ExtInt ActedVector::order() const {
  ExtInt best = ExtInt::infinity();
  for (const auto& e : numerators) best = std::min(best, val(e));
  if (best.is_infinite()) return best;
  return best.value() - val(denominator).value();
}

namespace {

// p(ρ, 1/det ρ) · det^K, where K bounds the ginv-degree of p.
LaurentPoly evaluate_at_arc(const MultiPoly& p, const Arc& arc, int K) {
  const std::size_t m = arc.size();
  if (p.vars().size() != m * m + 1) throw InputError("polynomial does not live in the group ring of the arc");
  auto entries = arc.entries();
  std::vector<LaurentPoly> det_powers{LaurentPoly(1)};
  LaurentPoly out;
  for (const auto& [mono, c] : p.terms()) {
    LaurentPoly term(c);
    for (std::size_t i = 0; i < m * m && !term.is_zero(); ++i) {
      if (mono[i] > 0) term *= entries[i].pow(mono[i]);
    }
    int power = K - mono.back();
    while (static_cast<int>(det_powers.size()) <= power) det_powers.push_back(det_powers.back() * arc.det());
    term *= det_powers[power];
    out += term;
  }
  return out;
}

int ginv_degree(const MultiPoly& p) { return p.degree_in(p.vars().size() - 1); }

}  // namespace

bool check_arc(const GroupPresentation& group, const Arc& arc) {
  if (group.size() != arc.size()) {
    throw InputError("arc of size " + std::to_string(arc.size()) + " for group " + group.label());
  }
  for (const auto& rel : group.ideal().generators()) {
    if (!evaluate_at_arc(rel, arc, ginv_degree(rel)).is_zero()) return false;
  }
  return true;
}

bool arcs_equivalent(const Arc& a, const Arc& b) {
  if (a.size() != b.size()) throw InputError("arcs of different sizes");
  // ρ^{-1} = adj(ρ)/det(ρ): integrality of a composite means every entry of
  // the adjugate product has valuation at least val(det ρ).
  if (val(a.det()) != val(b.det())) return false;
  const std::int64_t d = val(a.det()).value();
  LaurentMatrix adj = adjugate(a.matrix());
  for (const auto& prod : {multiply(adj, b.matrix()), multiply(b.matrix(), adj)}) {
    for (const auto& row : prod) {
      for (const auto& e : row) {
        if (val(e) < ExtInt(d)) return false;
      }
    }
  }
  return true;
}

ActedVector act_fraction(const Representation& rep, const Arc& arc, std::span<const Rational> v) {
  if (v.size() != rep.dim()) throw InputError("vector dimension does not match the representation");
  ActedVector out;
  if (rep.is_torus()) {
    if (!arc.is_diagonal()) throw InputError("torus-weight representation needs a diagonal arc");
    const std::size_t k = arc.size();
    std::vector<std::int64_t> shift(k, 0);
    for (const auto& w : rep.weights()) {
      if (w.size() != k) throw InputError("weight rank does not match the arc size");
      for (std::size_t j = 0; j < k; ++j) shift[j] = std::max(shift[j], -w[j]);
    }
    for (std::size_t j = 0; j < k; ++j) out.denominator *= arc.matrix()[j][j].pow(shift[j]);
    for (std::size_t i = 0; i < v.size(); ++i) {
      LaurentPoly c(v[i]);
      for (std::size_t j = 0; j < k && !c.is_zero(); ++j) {
        c *= arc.matrix()[j][j].pow(rep.weights()[i][j] + shift[j]);
      }
      out.numerators.push_back(std::move(c));
    }
    return out;
  }
  int K = 0;
  for (const auto& row : rep.matrix()) {
    for (const auto& e : row) K = std::max(K, ginv_degree(e));
  }
  out.denominator = arc.det().pow(K);
  for (const auto& row : rep.matrix()) {
    LaurentPoly acc;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (v[j] == 0 || row[j].is_zero()) continue;
      acc += evaluate_at_arc(row[j], arc, K) * LaurentPoly(v[j]);
    }
    out.numerators.push_back(std::move(acc));
  }
  return out;
}

std::vector<LaurentPoly> act(const Representation& rep, const Arc& arc, std::span<const Rational> v) {
  ActedVector f = act_fraction(rep, arc, v);
  if (f.denominator == LaurentPoly(1)) return f.numerators;
  LaurentPoly inv = f.denominator.inverse_monomial();
  for (auto& e : f.numerators) e *= inv;
  return f.numerators;
}

std::int64_t deg_of_rep(const Representation& rep, std::size_t m) {
  std::int64_t d = 0;
  for (const auto& w : occurring_weights(rep, m)) {
    std::int64_t sum = 0;
    for (auto e : w) {
      if (e < 0) throw InputError("representation not polynomial; deg undefined");
      sum += e;
    }
    if (sum == 0) throw InputError("representation not polynomial; deg undefined");
    d = std::max(d, sum);
  }
  if (d == 0) throw InputError("representation not polynomial; deg undefined");
  return d;
}

ExtInt mu_weight(const Representation& V, const Representation& W, std::span<const Rational> v,
                 std::span<const Rational> w, const Arc& arc) {
  ExtInt ov = act_fraction(V, arc, v).order();
  if (ov.is_infinite()) throw InputError("v must be nonzero");
  if (std::all_of(w.begin(), w.end(), [](const Rational& c) { return c == 0; })) {
    if (w.size() != W.dim()) throw InputError("vector dimension does not match the representation");
    return ExtInt::infinity();
  }
  ExtInt ow = act_fraction(W, arc, w).order();
  return ow.value() - ov.value();
}

std::int64_t arc_norm(const Representation& V, std::span<const Rational> v, const Arc& arc) {
  const std::int64_t d = deg_of_rep(V, arc.size());
  ExtInt ov = act_fraction(V, arc, v).order();
  if (ov.is_infinite()) throw InputError("v must be nonzero");
  auto entries = arc.entries();
  return ov.value() - d * ord0(entries);
}

std::vector<std::int64_t> torus_arc_exponents(const Arc& arc) {
  if (!arc.is_diagonal()) throw InputError("torus arc must be diagonal");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < arc.size(); ++i) {
    ExtInt v = val(arc.matrix()[i][i]);
    if (v.is_infinite()) throw InputError("torus arc has a zero diagonal entry");
    out.push_back(v.value());
  }
  return out;
}

LaurentPoly random_laurent(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  LaurentPoly p;
  for (std::int64_t e = lo; e <= hi; ++e) p += LaurentPoly::monomial(make_rational(draw(rng, -2, 2)), e);
  return p;
}

Arc random_elementary(std::mt19937_64& rng, std::size_t m, std::int64_t lo, std::int64_t hi) {
  LaurentMatrix e = identity_matrix(m);
  if (m < 2) return Arc(std::move(e));
  auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(m) - 1));
  auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(m) - 2));
  if (j >= i) ++j;
  e[i][j] = random_laurent(rng, lo, hi);
  return Arc(std::move(e));
}

namespace {

Rational random_unit_constant(std::mt19937_64& rng) {
  std::int64_t c = draw(rng, 1, 2);
  return make_rational(draw(rng, 0, 1) == 0 ? c : -c);
}

}  // namespace

Arc random_torus_arc(std::mt19937_64& rng, std::size_t k) {
  LaurentMatrix d = identity_matrix(k);
  for (std::size_t i = 0; i < k; ++i) {
    LaurentPoly unit = LaurentPoly(1) + random_laurent(rng, 1, 2);
    d[i][i] = LaurentPoly::monomial(random_unit_constant(rng), draw(rng, -2, 2)) * unit;
  }
  return Arc(std::move(d));
}

Arc random_integral_unit(std::mt19937_64& rng, std::size_t m) {
  LaurentMatrix d = identity_matrix(m);
  for (std::size_t i = 0; i < m; ++i) d[i][i] = LaurentPoly(random_unit_constant(rng));
  Arc out(std::move(d));
  auto factors = draw(rng, 1, 3);
  for (std::int64_t k = 0; k < factors; ++k) out = out * random_elementary(rng, m, 0, 2);
  return out;
}

Arc random_group_arc(std::mt19937_64& rng, const GroupPresentation& group) {
  const std::size_t m = group.size();
  std::vector<std::int64_t> a(m);
  for (auto& e : a) e = draw(rng, -2, 2);
  if (group.kind() == GroupKind::SpecialLinear) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) sum += a[i];
    a[m - 1] = -sum;
  }
  Arc diag = Arc::one_parameter_subgroup(a);
  switch (group.kind()) {
    case GroupKind::Torus: {
      LaurentMatrix c = identity_matrix(m);
      for (std::size_t i = 0; i < m; ++i) c[i][i] = LaurentPoly(random_unit_constant(rng));
      return diag * Arc(std::move(c));
    }
    case GroupKind::SpecialLinear:
    case GroupKind::GeneralLinear: {
      Arc left = Arc::identity(m);
      Arc right = Arc::identity(m);
      for (auto n = draw(rng, 0, 2); n > 0; --n) left = left * random_elementary(rng, m, -2, 2);
      for (auto n = draw(rng, 0, 2); n > 0; --n) right = right * random_elementary(rng, m, -2, 2);
      return left * diag * right;
    }
    case GroupKind::Custom:
      break;
  }
  throw InputError("random arcs are only drawn for torus, SL and GL groups");
}

}  // namespace arcstab
