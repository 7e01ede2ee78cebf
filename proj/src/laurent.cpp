#include "arcstab/laurent.hpp"

#include <algorithm>
#include <limits>

#include "arcstab/errors.hpp"

namespace arcstab {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, std::int64_t exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

Rational LaurentPoly::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(std::int64_t k) const {
  if (k < 0) return inverse_monomial().pow(-k);
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::inverse_monomial() const {
  if (!is_monomial()) {
    throw InputError("Laurent polynomial " + to_string(*this) + " is not a unit of Q[t,1/t]");
  }
  const auto& [e, c] = *terms_.begin();
  return monomial(1 / c, -e);
}

ExtInt val(const LaurentPoly& f) {
  if (f.is_zero()) return ExtInt::infinity();
  return f.terms().begin()->first;
}

std::int64_t ord0(std::span<const LaurentPoly> entries) {
  ExtInt best = ExtInt::infinity();
  for (const auto& e : entries) best = std::min(best, val(e));
  if (best.is_infinite()) throw InputError("zero vector has no order");
  return best.value();
}

std::string to_string(const LaurentPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentMatrix identity_matrix(std::size_t m) {
  LaurentMatrix id(m, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < m; ++i) id[i][i] = LaurentPoly(1);
  return id;
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  LaurentMatrix out(n, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw InputError("matrix dimension mismatch");
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (!a[i][l].is_zero() && !b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
      }
    }
  }
  return out;
}

namespace {

LaurentMatrix minor_matrix(const LaurentMatrix& a, std::size_t row, std::size_t col) {
  LaurentMatrix out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == row) continue;
    std::vector<LaurentPoly> r;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != col) r.push_back(a[i][j]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

// Laplace expansion; matrices here are at most a handful of rows.
LaurentPoly determinant(const LaurentMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw InputError("determinant of a non-square matrix");
  }
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  LaurentPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    LaurentPoly term = a[0][j] * determinant(minor_matrix(a, 0, j));
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

LaurentMatrix adjugate(const LaurentMatrix& a) {
  const std::size_t n = a.size();
  LaurentMatrix adj(n, std::vector<LaurentPoly>(n));
  if (n == 1) {
    adj[0][0] = LaurentPoly(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly c = determinant(minor_matrix(a, i, j));
      adj[j][i] = (i + j) % 2 == 0 ? c : -c;
    }
  }
  return adj;
}

}  // namespace arcstab
