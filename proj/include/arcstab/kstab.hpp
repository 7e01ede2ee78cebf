#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcstab/errors.hpp"
#include "arcstab/rational.hpp"

namespace arcstab {

struct HilbCoeffs {
  Rational a0;
  Rational a1;
};

struct ModelNumbers {
  Rational b0;
  Rational b1;
  Rational r = 1;
  int n = 1;
  std::optional<Rational> l_mix;
  std::optional<Rational> l_top;
  std::optional<Rational> L_n;
};

Rational df_invariant(const HilbCoeffs& a, const ModelNumbers& b);
Rational model_norm(const ModelNumbers& b);

using Point = std::vector<Rational>;

/// Full-dimensional rational polytope of dimension 1 or 2. In
/// 2D the vertices are the hull vertices counterclockwise, starting from the
/// lexicographically smallest; in 1D they are the two endpoints, in order.
class Polytope {
 public:
  /// Convex hull of the points; collinear or repeated input points are fine.
  static Polytope hull(std::vector<Point> points);

  int dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }

 private:
  int dim_ = 0;
  std::vector<Point> vertices_;
};

struct AffineFunction {
  Point gradient;
  Rational constant;

  Rational operator()(const Point& x) const;
  friend bool operator==(const AffineFunction&, const AffineFunction&) = default;
};

/// f = max_j ℓ_j, with pieces that are nowhere the unique maximum dropped.
class PLFunction {
 public:
  PLFunction(const Polytope& P, std::vector<AffineFunction> pieces);

  const std::vector<AffineFunction>& pieces() const { return pieces_; }
  Rational operator()(const Point& x) const;

 private:
  std::vector<AffineFunction> pieces_;
};

/// Lattice length of the segment pq: the rational multiple of the primitive
/// integer direction that spans it.
Rational lattice_length(const Point& p, const Point& q);

HilbCoeffs toric_hilb(const Polytope& P);

struct ToricIntegrals {
  Rational volume;
  /// Lattice-normalized boundary measure σ(∂P).
  Rational boundary_measure;
  Rational integral;
  Rational boundary_integral;
  Rational minimum;
};

ToricIntegrals toric_integrals(const Polytope& P, const PLFunction& f);
/// b0 = -∫f, b1 = -(1/2)∫_∂ f dσ.
ModelNumbers toric_model_numbers(const Polytope& P, const PLFunction& f);
Rational toric_df(const Polytope& P, const PLFunction& f);
/// ∫f / vol - min f.
Rational toric_minnorm(const Polytope& P, const PLFunction& f);

/// The function max(0, <normal, x> - offset).
struct Crease {
  Point normal;
  Rational offset;
};

struct UniformResult {
  bool fails = false;
  /// min of DF - ε·minnorm over the family normalized by minnorm = 1.
  Rational minimum;
  /// Minimizer, rescaled to a primitive integer gradient set and re-verified.
  std::optional<PLFunction> certificate;
  Rational certificate_df;
  Rational certificate_minnorm;
  /// Coefficients of the minimizer: gradient of the affine part, then one
  /// nonnegative weight per crease.
  std::vector<Rational> coefficients;
};

/// Minimizes DF(f) - ε·minnorm(f) over f = <α, x> + Σ λ_c crease_c (λ ≥ 0)
/// normalized by minnorm(f) = 1, with one exact LP per candidate minimum point.
UniformResult toric_uniform_search(const Polytope& P, const std::vector<Crease>& creases, const Rational& epsilon,
                                   Budget& budget);

}  // namespace arcstab
