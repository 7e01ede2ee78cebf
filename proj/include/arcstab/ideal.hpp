#pragma once

#include <span>
#include <string>
#include <vector>

#include "arcstab/errors.hpp"
#include "arcstab/polynomial.hpp"

namespace arcstab {

/// Finitely generated ideal of Q[vars]. Zero generators are dropped on
/// construction, so the zero ideal has no generators at all.
class Ideal {
 public:
  explicit Ideal(VarList vars) : vars_(std::move(vars)) {}
  Ideal(VarList vars, std::vector<MultiPoly> generators);

  static Ideal unit(VarList vars) { return Ideal(vars, {MultiPoly::constant(vars, 1)}); }

  const VarList& vars() const { return vars_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  bool has_no_generators() const { return generators_.empty(); }

  /// True iff every generator vanishes at `point`.
  bool vanishes_at(std::span<const Rational> point) const;
  Ideal in_ring(const VarList& target) const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  VarList vars_;
  std::vector<MultiPoly> generators_;
};

Ideal operator+(const Ideal& a, const Ideal& b);

/// Reduced Groebner basis: monic, inter-reduced, sorted by increasing leading
/// monomial. Each S-polynomial reduction costs one budget step.
Ideal groebner(const Ideal& ideal, const MonomialOrder& order, Budget& budget);
Ideal groebner(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

/// Full reduction of f modulo `basis` (any generating set; a Groebner basis
/// for a canonical remainder).
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis, const MonomialOrder& order);
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order);
/// Buchberger's criterion: every S-polynomial of `basis` reduces to zero.
bool is_groebner_basis(std::span<const MultiPoly> basis, const MonomialOrder& order);

/// I ∩ Q[vars \ drop]; the result lives in the remaining variables.
Ideal eliminate(const Ideal& ideal, const VarList& drop, Budget& budget);
Ideal eliminate(const Ideal& ideal, const VarList& drop);

/// (I : f^∞), through an auxiliary variable z with 1 - z f.
Ideal saturate(const Ideal& ideal, const MultiPoly& f, Budget& budget);
Ideal saturate(const Ideal& ideal, const MultiPoly& f);
/// (I : J^∞) as the intersection of the saturations by each generator of J.
Ideal saturate(const Ideal& ideal, const Ideal& by, Budget& budget);

Ideal intersect(const Ideal& a, const Ideal& b, Budget& budget);

bool member(const MultiPoly& f, const Ideal& ideal, Budget& budget);
bool member(const MultiPoly& f, const Ideal& ideal);
/// b ⊆ a.
bool contains(const Ideal& a, const Ideal& b, Budget& budget);
bool same_ideal(const Ideal& a, const Ideal& b, Budget& budget);
bool is_unit_ideal(const Ideal& ideal, Budget& budget);

/// A variable name not present in `vars`, derived from `stem`.
std::string fresh_variable(const VarList& vars, const std::string& stem);

std::vector<std::string> generator_strings(const Ideal& ideal);

}  // namespace arcstab
