#pragma once

#include <cstdint>
#include <vector>

#include "arcstab/pairs.hpp"

namespace arcstab {

/// Ten fixed pairs on the rank-2 torus with small weights.
std::vector<Pair> fixed_torus_pairs();

struct ReductionSample {
  std::size_t arcs = 0;
  std::size_t comparisons = 0;
  std::size_t agree = 0;
};

/// For `count` random torus arcs c·t^a·(1 + O(t)), compares the weight of the
/// arc acting through ginv-matrices against the weight of diag(t^a).
ReductionSample torus_reduction_sample(const std::vector<Pair>& pairs, std::size_t count, std::uint64_t seed);

struct NormSample {
  std::size_t arcs = 0;
  std::size_t nonnegative = 0;
  std::size_t equivalent_to_identity = 0;
  std::size_t zero_on_identity_class = 0;
};

/// Draws diagonal, elementary-product and integral-unit arcs of GL(2) in
/// rotation and evaluates arc_norm on random vectors of Sym^d, d = 1..4.
NormSample norm_sample(std::size_t count, std::uint64_t seed);

}  // namespace arcstab
