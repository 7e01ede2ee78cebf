#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "arcstab/arc.hpp"
#include "arcstab/errors.hpp"

namespace arcstab {

/// A point [v:w] of P(V ⊕ W) for two representations of one group.
struct Pair {
  Pair(GroupPresentation group, Representation V, Representation W, std::vector<Rational> v,
       std::vector<Rational> w);

  GroupPresentation group;
  Representation V;
  Representation W;
  std::vector<Rational> v;
  std::vector<Rational> w;

  bool w_is_zero() const;
};

enum class VerdictStatus { Semistable, Unstable, StableAt, NotStableAt, Unknown };

std::string to_string(VerdictStatus s);

/// χ = Σ λ_i χ_i with λ ≥ 0 summing to one, over weights of supp(v).
struct ContainmentWitness {
  Weight point;
  std::vector<std::pair<Weight, Rational>> combination;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  /// Destabilizing one-parameter subgroup diag(t^{a_i}).
  std::optional<std::vector<std::int64_t>> exponents;
  /// Destabilizing arc found by sampling.
  std::optional<Arc> arc;
  /// Weight of the witness, recomputed through mu_weight.
  std::optional<ExtInt> mu;
  /// Arc norm of the witness, for level checks.
  std::optional<std::int64_t> norm;
  std::optional<std::int64_t> level;
  std::vector<ContainmentWitness> containment;

  bool positive() const { return status == VerdictStatus::Semistable || status == VerdictStatus::StableAt; }
};

/// Weights of the coordinates where the vector is nonzero.
std::set<Weight> support(const Representation& rep, std::span<const Rational> x);

/// Semistable iff conv(supp w) ⊆ conv(supp v). Unstable verdicts carry an
/// integer exponent vector whose one-parameter subgroup has negative weight.
Verdict torus_semistable(const Pair& p, Budget& budget);

/// [e^{⊗d} ⊗ v^{⊗l} : w^{⊗(l+1)}] at the level of weight supports, coordinates all one.
Pair associated_pair(const Pair& p, std::int64_t l);

/// Semistability of the associated pair at level l.
Verdict torus_stable_at(const Pair& p, std::int64_t l, Budget& budget);

/// Decides μ(a) ≥ ‖a‖/(l+1) over all real exponent vectors a by one exact LP
/// per cone of the common refinement of the normal fans of supp v, supp w and
/// the coordinate fan.
Verdict dr_stable_at(const Pair& p, std::int64_t l, Budget& budget);

struct FalsifierResult {
  std::optional<Arc> arc;
  std::optional<ExtInt> mu;
  std::size_t draws = 0;
};

/// Draws up to `draws` arcs from random_group_arc with the given seed and
/// returns the first one of negative weight, re-verified.
FalsifierResult sample_falsifier(const Pair& p, std::size_t draws, std::uint64_t seed);

enum class LevelCheck { AssociatedPair, Numerical };
/// Least l in [1, max_level] at which the chosen check succeeds.
std::optional<std::int64_t> least_stable_level(const Pair& p, std::int64_t max_level, LevelCheck check,
                                               Budget& budget);

/// Rational roots [a:b] of the binary form Σ c_i x^i y^(d-i), with multiplicities.
struct FormRoot {
  Rational a;
  Rational b;
  unsigned multiplicity = 0;
};
std::vector<FormRoot> rational_roots(std::span<const Rational> coeffs);

struct FormProbe {
  /// Root moved to [1:0], or none for the identity probe.
  std::optional<FormRoot> root;
  std::vector<Rational> moved;
  Verdict verdict;
};

struct BinaryFormVerdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::vector<FormProbe> probes;
};

/// SL(2) stability of a nonzero binary form, as [f : 1] with trivial W. Each
/// rational root is moved to [1:0] by an SL(2) matrix and the conjugate is
/// checked on the diagonal torus, where x^i y^(d-i) has weight 2i - d.
BinaryFormVerdict binary_form_stability(std::span<const Rational> coeffs, Budget& budget);

/// Positive multiple of a rational vector with coprime integer entries.
std::vector<std::int64_t> primitive_integer_vector(std::span<const Rational> x);

}  // namespace arcstab
