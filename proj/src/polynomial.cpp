#include "arcstab/polynomial.hpp"

#include <algorithm>

#include "arcstab/errors.hpp"

namespace arcstab {

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

namespace {

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  int da = 0;
  int db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::GrevLex:
      return grevlex_range(a, b, 0, a.size());
    case Kind::Block: {
      auto first = grevlex_range(a, b, 0, split_);
      if (first != 0) return first;
      return grevlex_range(a, b, split_, a.size());
    }
  }
  return std::strong_ordering::equal;
}

void MonomialOrder::validate(std::size_t nvars) const {
  if (kind_ == Kind::Block && split_ > nvars) {
    throw InputError("block order split " + std::to_string(split_) + " exceeds " +
                     std::to_string(nvars) + " variables");
  }
}

MultiPoly MultiPoly::constant(VarList vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Monomial(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(VarList vars, const std::string& name) {
  MultiPoly p(std::move(vars));
  auto idx = p.var_index(name);
  if (!idx) throw InputError("unknown variable '" + name + "'");
  Monomial m(p.vars_.size(), 0);
  m[*idx] = 1;
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::term(VarList vars, Monomial m, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (m.size() != p.vars_.size()) throw InputError("monomial length does not match the ring");
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && arcstab::total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::size_t> MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::involves(std::size_t var) const { return degree_in(var) > 0; }

int MultiPoly::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, arcstab::total_degree(m));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = arcstab::total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (arcstab::total_degree(m) != d) return false;
  }
  return true;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw InputError("polynomials live in different rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  check_ring(o);
  MultiPoly out(vars_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) out.add_term(product(m1, m2), c1 * c2);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::in_ring(const VarList& target) const {
  std::vector<std::size_t> map(vars_.size(), target.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(target.begin(), target.end(), vars_[i]);
    if (it != target.end()) {
      map[i] = static_cast<std::size_t>(it - target.begin());
    } else if (involves(i)) {
      throw InputError("variable '" + vars_[i] + "' is not in the target ring");
    }
  }
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    Monomial n(target.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) n[map[i]] = m[i];
    }
    out.add_term(n, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != vars_.size()) throw InputError("substitution arity mismatch");
  if (images.empty()) return *this;
  const VarList& target = images[0].vars();
  // Cache powers per variable; exponents are small.
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (static_cast<int>(cache.size()) <= m[i]) cache.push_back(cache.back() * images[i]);
      t *= cache[m[i]];
    }
    out += t;
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw InputError("evaluation point has the wrong dimension");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

LaurentPoly MultiPoly::evaluate(std::span<const LaurentPoly> point) const {
  if (point.size() != vars_.size()) throw InputError("evaluation point has the wrong dimension");
  LaurentPoly sum;
  for (const auto& [m, c] : terms_) {
    LaurentPoly t(c);
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i] > 0) t *= point[i].pow(m[i]);
    }
    sum += t;
  }
  return sum;
}

const Monomial& MultiPoly::leading_monomial(const MonomialOrder& order) const {
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (order.less(best->first, it->first)) best = it;
  }
  return best->first;
}

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
  auto order = MonomialOrder::grevlex();
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += f.vars()[i];
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

VarList merge_vars(const VarList& a, const VarList& b) {
  VarList out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace arcstab
