#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arcstab/ideal.hpp"

namespace arcstab {

using RationalMatrix = std::vector<std::vector<Rational>>;

enum class GroupKind { Torus, SpecialLinear, GeneralLinear, Custom };

/// A linear algebraic group G ⊂ GL(m) cut out of the m² entry variables plus
/// an inverse-determinant variable `ginv`, with ginv·det - 1 always among the
/// relations. Entry variables are named g11, g12, ... (row, column).
class GroupPresentation {
 public:
  /// Diagonal k×k matrices with k free units.
  static GroupPresentation torus(std::size_t k);
  static GroupPresentation special_linear(std::size_t m);
  static GroupPresentation general_linear(std::size_t m);
  /// Extra relations in the entry variables (and ginv); ginv·det - 1 is appended.
  static GroupPresentation custom(std::size_t m, std::vector<MultiPoly> relations);

  GroupKind kind() const { return kind_; }
  std::size_t size() const { return m_; }
  std::string label() const;
  const VarList& vars() const { return vars_; }
  const Ideal& ideal() const { return ideal_; }

  const std::string& entry_name(std::size_t i, std::size_t j) const { return vars_[i * m_ + j]; }
  const std::string& inverse_det_name() const { return vars_.back(); }
  MultiPoly entry(std::size_t i, std::size_t j) const { return MultiPoly::variable(vars_, entry_name(i, j)); }
  MultiPoly inverse_det() const { return MultiPoly::variable(vars_, inverse_det_name()); }
  MultiPoly determinant() const;

  /// Coordinates (entries row-major, then 1/det) of an invertible rational matrix.
  std::vector<Rational> coordinates(const RationalMatrix& g) const;
  bool contains(const RationalMatrix& g) const;
  /// A random rational point of G, for torus, SL and GL only.
  RationalMatrix sample_point(std::mt19937_64& rng) const;
  bool can_sample() const { return kind_ != GroupKind::Custom; }

 private:
  GroupPresentation(GroupKind kind, std::size_t m);
  void finish(std::vector<MultiPoly> relations);

  GroupKind kind_;
  std::size_t m_;
  VarList vars_;
  Ideal ideal_;
};

Rational determinant(const RationalMatrix& a);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// Uniform integer in [lo, hi] from raw engine output, so draws are
/// reproducible across standard library implementations.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace arcstab
