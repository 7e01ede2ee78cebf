#pragma once

#include <cstddef>
#include <vector>

#include "arcstab/errors.hpp"
#include "arcstab/rational.hpp"

namespace arcstab::lp {

enum class Sense { LessEq, Equal, GreaterEq };

struct Constraint {
  std::vector<Rational> coeffs;
  Sense sense = Sense::LessEq;
  Rational rhs = 0;
};

/// Variables are nonnegative unless flagged free.
struct Problem {
  std::size_t num_vars = 0;
  std::vector<bool> free;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  bool minimize = true;

  explicit Problem(std::size_t n) : num_vars(n), free(n, false), objective(n, 0) {}
  void add(std::vector<Rational> coeffs, Sense sense, Rational rhs) {
    constraints.push_back({std::move(coeffs), sense, std::move(rhs)});
  }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value = 0;
  std::vector<Rational> x;
};

/// Two-phase dense tableau simplex in exact arithmetic with Bland's rule, so it
/// terminates on degenerate problems. One budget step per pivot.
Solution solve(const Problem& problem, Budget& budget);

}  // namespace arcstab::lp
