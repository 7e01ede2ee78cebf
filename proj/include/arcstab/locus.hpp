#pragma once

#include <string>
#include <vector>

#include "arcstab/pairs.hpp"

namespace arcstab {

/// G acting linearly on an affine space or on the cone over a projective
/// space, restricted to an invariant closed Y with a closed target Ŵ ⊆ Y.
struct ActionProblem {
  /// `action` holds g·y as a square matrix of polynomials in the group
  /// variables. Ideals are given in the ring of `vars`. The second copy of the
  /// coordinates gets fresh names.
  ActionProblem(GroupPresentation group, VarList vars, PolyMatrix action, Ideal Y, Ideal W_hat,
                bool projective, Budget& budget);

  GroupPresentation group;
  VarList y1;
  VarList y2;
  PolyMatrix action;
  Ideal Y;
  Ideal W_hat;
  bool projective = false;
};

/// Diagonal action of the torus with one weight per coordinate.
PolyMatrix torus_action_matrix(const GroupPresentation& torus, const std::vector<Weight>& weights);

/// In the ring group ∪ y1 ∪ y2.
Ideal graph_ideal(const ActionProblem& prob);
/// In the ring y1 ∪ y2.
Ideal orbit_map_closure(const ActionProblem& prob, Budget& budget);

struct OracleRow {
  std::vector<Rational> point;
  bool degenerates = false;
  bool in_locus = false;
};

struct LocusReport {
  /// Reduced grevlex basis in the ring y1.
  Ideal locus;
  std::vector<OracleRow> oracle;
  /// Some probe lies in the locus without degenerating.
  bool overapproximation = false;
  /// Every degenerating probe lies in the locus.
  bool sound = true;
};

LocusReport degeneration_locus(const ActionProblem& prob, std::span<const std::vector<Rational>> probes,
                               Budget& budget);

/// Whether the orbit closure of y0 meets Ŵ.
bool point_degenerates(const ActionProblem& prob, std::span<const Rational> y0, Budget& budget);

/// Pairs on a torus whose coordinates are polynomials in base parameters.
struct PairFamily {
  GroupPresentation group;
  Representation V;
  Representation W;
  VarList base;
  std::vector<MultiPoly> v;
  std::vector<MultiPoly> w;

  Pair fiber(std::span<const Rational> b) const;
};

/// Fibers where exactly the coordinates in `nonvanishing` are nonzero.
struct UnstableStratum {
  /// Zariski closure of the stratum.
  Ideal closure;
  std::vector<std::size_t> vanishing;
  std::vector<std::size_t> nonvanishing;
};

/// Coordinates are indexed v first, then w. Fibers with v = 0 are not pairs
/// and belong to no stratum.
struct FamilyLocus {
  std::vector<UnstableStratum> strata;
  /// Closures of the strata with redundant ones dropped; their union is the
  /// closure of the unstable locus.
  std::vector<Ideal> pieces;
  /// Exact membership through the stratum conditions.
  bool contains(const PairFamily& fam, std::span<const Rational> b) const;
};

FamilyLocus family_unstable_locus(const PairFamily& fam, Budget& budget);

}  // namespace arcstab
