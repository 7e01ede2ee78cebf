#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arcstab/laurent.hpp"
#include "arcstab/rational.hpp"

namespace arcstab {

using Monomial = std::vector<std::int32_t>;
using VarList = std::vector<std::string>;

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, assumes a | b
Monomial product(const Monomial& a, const Monomial& b);
int total_degree(const Monomial& m);

class MonomialOrder {
 public:
  enum class Kind { GrevLex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Variables [0, split) form the first block; each block is ordered by grevlex,
  /// and the first block dominates.
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::Block, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  /// Throws InputError if the block split is out of range for `nvars`.
  void validate(std::size_t nvars) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::size_t split) : kind_(k), split_(split) {}
  Kind kind_;
  std::size_t split_;
};

/// Polynomial over Q in an explicit, ordered variable list.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(VarList vars, const Rational& c);
  static MultiPoly variable(VarList vars, const std::string& name);
  static MultiPoly term(VarList vars, Monomial m, const Rational& c);

  const VarList& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Index of `name` in the variable list, if present.
  std::optional<std::size_t> var_index(const std::string& name) const;
  bool involves(std::size_t var) const;
  int degree_in(std::size_t var) const;
  int total_degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  MultiPoly operator-() const { return *this * Rational(-1); }
  MultiPoly pow(unsigned k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Re-expresses the polynomial in `target`; every variable it actually uses
  /// must occur there by name.
  MultiPoly in_ring(const VarList& target) const;
  /// Replaces variable i by images[i]; all images share one ring.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  Rational evaluate(std::span<const Rational> point) const;
  LaurentPoly evaluate(std::span<const LaurentPoly> point) const;

  /// Leading monomial under `order`; the polynomial must be nonzero.
  const Monomial& leading_monomial(const MonomialOrder& order) const;

 private:
  void check_ring(const MultiPoly& o) const;
  VarList vars_;
  Terms terms_;
};

/// Canonical text: terms in decreasing grevlex order, "3/2*x^2*y - t".
std::string to_string(const MultiPoly& f);

/// Union of two variable lists, keeping first-seen order.
VarList merge_vars(const VarList& a, const VarList& b);

}  // namespace arcstab
