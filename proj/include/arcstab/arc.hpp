#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "arcstab/laurent.hpp"
#include "arcstab/representation.hpp"

namespace arcstab {

/// A Q((t))-point of GL(m), truncated to Laurent polynomial entries. Series
/// arcs must be truncated by the caller; every weight computation below only
/// reads finitely many terms.
class Arc {
 public:
  /// Throws InputError unless the matrix is square with nonzero determinant.
  explicit Arc(LaurentMatrix matrix);

  static Arc identity(std::size_t m);
  /// diag(t^{a_1}, ..., t^{a_m}).
  static Arc one_parameter_subgroup(std::span<const std::int64_t> exponents);

  std::size_t size() const { return matrix_.size(); }
  const LaurentMatrix& matrix() const { return matrix_; }
  const LaurentPoly& det() const { return det_; }
  bool is_diagonal() const;
  /// Entries flattened row-major, the arc as a vector of C^{m×m}.
  std::vector<LaurentPoly> entries() const;

  friend Arc operator*(const Arc& a, const Arc& b) { return Arc(multiply(a.matrix_, b.matrix_)); }

 private:
  LaurentMatrix matrix_;
  LaurentPoly det_;
};

/// ρ.v written as numerators / denominator, exact over Q((t)).
struct ActedVector {
  std::vector<LaurentPoly> numerators;
  LaurentPoly denominator = LaurentPoly(1);

  /// ord0 of the vector; +infinity for zero.
  ExtInt order() const;
};

bool check_arc(const GroupPresentation& group, const Arc& arc);
/// Both ρ^{-1}ρ' and ρ'ρ^{-1} have integral entries and unit determinant.
bool arcs_equivalent(const Arc& a, const Arc& b);

ActedVector act_fraction(const Representation& rep, const Arc& arc, std::span<const Rational> v);
/// ρ.v as Laurent polynomials; throws if the result needs a non-monomial denominator.
std::vector<LaurentPoly> act(const Representation& rep, const Arc& arc, std::span<const Rational> v);

/// max coordinate sum of the occurring weights; throws when some weight has a
/// negative coordinate or is zero.
std::int64_t deg_of_rep(const Representation& rep, std::size_t m);

/// ord0(ρ.w) - ord0(ρ.v); +infinity when w = 0.
ExtInt mu_weight(const Representation& V, const Representation& W, std::span<const Rational> v,
                 std::span<const Rational> w, const Arc& arc);

/// ord0(ρ.v) - deg(V)·ord0(ρ).
std::int64_t arc_norm(const Representation& V, std::span<const Rational> v, const Arc& arc);

/// Valuations of the diagonal entries of a diagonal arc.
std::vector<std::int64_t> torus_arc_exponents(const Arc& arc);

// Random arcs. Fixed distributions so draws are reproducible from a seed.

/// Laurent polynomial with exponents in [lo, hi] and coefficients in {-2..2}.
LaurentPoly random_laurent(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);
/// I + p E_ij with i != j, p from random_laurent(lo, hi).
Arc random_elementary(std::mt19937_64& rng, std::size_t m, std::int64_t lo, std::int64_t hi);
/// diag(c_i t^{a_i} u_i): a_i in [-2, 2], c_i in {±1, ±2}, u_i = 1 + (terms of
/// positive degree ≤ 2), i.e. a torus arc perturbed by units of Q[[t]].
Arc random_torus_arc(std::mt19937_64& rng, std::size_t k);
/// Products of constant diagonal units and elementary matrices with
/// polynomial entries: integral arcs with integral inverse.
Arc random_integral_unit(std::mt19937_64& rng, std::size_t m);
/// L·D·R with D = diag(t^{a_i}), a_i in [-2, 2] (summing to zero for SL), and
/// L, R products of 0..2 elementary matrices with entries of degree in [-2, 2].
/// For a torus, D times a constant diagonal.
Arc random_group_arc(std::mt19937_64& rng, const GroupPresentation& group);

}  // namespace arcstab
