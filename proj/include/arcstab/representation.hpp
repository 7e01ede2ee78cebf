#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "arcstab/group.hpp"

namespace arcstab {

using Weight = std::vector<std::int64_t>;
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// A finite-dimensional representation, either by torus weights (one weight
/// per coordinate) or by a matrix of polynomials in the group's variables.
class Representation {
 public:
  enum class Kind { TorusWeights, MatrixAction };

  static Representation torus_weights(std::vector<Weight> weights);
  /// Validates shape and, when the group can be sampled, that g ↦ A(g) is a
  /// homomorphism on three random pairs of rational points.
  static Representation matrix_action(const GroupPresentation& group, PolyMatrix matrix);

  Kind kind() const { return kind_; }
  bool is_torus() const { return kind_ == Kind::TorusWeights; }
  std::size_t dim() const { return is_torus() ? weights_.size() : matrix_.size(); }
  const std::vector<Weight>& weights() const { return weights_; }
  const PolyMatrix& matrix() const { return matrix_; }

  /// The action matrix at a rational group point, given by its coordinates.
  RationalMatrix evaluate(std::span<const Rational> coordinates) const;

 private:
  Kind kind_ = Kind::TorusWeights;
  std::vector<Weight> weights_;
  PolyMatrix matrix_;
};

/// g acting on column vectors by multiplication.
Representation standard_representation(const GroupPresentation& group);
/// One-dimensional trivial action.
Representation trivial_representation(const GroupPresentation& group);
/// Sym^d of the standard action of a 2×2 group on binary forms of degree d,
/// basis x^i y^(d-i) (i = 0..d), with (g·f)(x, y) = f(g11 x + g21 y, g12 x + g22 y).
/// The diagonal torus acts on x^i y^(d-i) with weight (i, d-i).
Representation sym_power(const GroupPresentation& group, unsigned d);
/// Torus weights of the m-dimensional diagonal torus of `group` realized as a
/// diagonal MatrixAction, negative exponents going through ginv.
Representation torus_as_matrix(const Representation& rep, const GroupPresentation& group);

/// Weights (w.r.t. the diagonal torus of GL(m)) occurring in the representation.
std::set<Weight> occurring_weights(const Representation& rep, std::size_t m);

}  // namespace arcstab
