#include <optional>
#include <random>

#include "doctest.h"

#include "arcstab/lp.hpp"

using namespace arcstab;
using lp::Sense;

namespace {

// Brute force over 2D vertices: every pair of tight constraints (including
// x >= 0, y >= 0) that intersects in a feasible point.
std::optional<Rational> brute_min(const std::vector<lp::Constraint>& cons, const std::vector<Rational>& obj) {
  std::vector<lp::Constraint> all = cons;
  all.push_back({{1, 0}, Sense::GreaterEq, 0});
  all.push_back({{0, 1}, Sense::GreaterEq, 0});
  auto feasible = [&](const Rational& x, const Rational& y) {
    for (const auto& c : all) {
      Rational lhs = c.coeffs[0] * x + c.coeffs[1] * y;
      if (c.sense == Sense::LessEq && lhs > c.rhs) return false;
      if (c.sense == Sense::GreaterEq && lhs < c.rhs) return false;
      if (c.sense == Sense::Equal && lhs != c.rhs) return false;
    }
    return true;
  };
  std::optional<Rational> best;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const auto& a = all[i].coeffs;
      const auto& b = all[j].coeffs;
      Rational det = a[0] * b[1] - a[1] * b[0];
      if (det == 0) continue;
      Rational x = (all[i].rhs * b[1] - a[1] * all[j].rhs) / det;
      Rational y = (a[0] * all[j].rhs - all[i].rhs * b[0]) / det;
      if (!feasible(x, y)) continue;
      Rational v = obj[0] * x + obj[1] * y;
      if (!best || v < *best) best = v;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("small LP by hand") {
  // min -x - y s.t. x + 2y <= 4, 3x + y <= 6 -> optimum at (8/5, 6/5), value -14/5.
  lp::Problem p(2);
  p.objective = {-1, -1};
  p.add({1, 2}, Sense::LessEq, 4);
  p.add({3, 1}, Sense::LessEq, 6);
  Budget b;
  auto s = lp::solve(p, b);
  REQUIRE(s.status == lp::Status::Optimal);
  CHECK(s.value == make_rational(-14, 5));
  CHECK(s.x[0] == make_rational(8, 5));
  CHECK(s.x[1] == make_rational(6, 5));
}

TEST_CASE("infeasible, unbounded and free variables") {
  Budget b;
  lp::Problem inf(1);
  inf.add({1}, Sense::GreaterEq, 2);
  inf.add({1}, Sense::LessEq, 1);
  CHECK(lp::solve(inf, b).status == lp::Status::Infeasible);

  lp::Problem unb(1);
  unb.objective = {-1};
  CHECK(lp::solve(unb, b).status == lp::Status::Unbounded);

  lp::Problem fr(1);
  fr.free[0] = true;
  fr.objective = {1};
  fr.add({1}, Sense::GreaterEq, -3);
  auto s = lp::solve(fr, b);
  REQUIRE(s.status == lp::Status::Optimal);
  CHECK(s.x[0] == -3);

  lp::Problem mx(1);
  mx.minimize = false;
  mx.objective = {2};
  mx.add({1}, Sense::LessEq, make_rational(5, 2));
  CHECK(lp::solve(mx, b).value == 5);
}

TEST_CASE("redundant equalities and degeneracy") {
  lp::Problem p(3);
  p.objective = {1, 1, 1};
  p.add({1, 1, 1}, Sense::Equal, 1);
  p.add({2, 2, 2}, Sense::Equal, 2);
  p.add({1, 0, 0}, Sense::GreaterEq, 0);
  Budget b;
  auto s = lp::solve(p, b);
  REQUIRE(s.status == lp::Status::Optimal);
  CHECK(s.value == 1);
}

TEST_CASE("random 2D LPs agree with vertex enumeration") {
  std::mt19937_64 rng(99);
  auto r = [&](int lo, int hi) { return make_rational(lo + static_cast<std::int64_t>(rng() % (hi - lo + 1))); };
  for (int trial = 0; trial < 300; ++trial) {
    lp::Problem p(2);
    p.objective = {r(-3, 3), r(-3, 3)};
    int m = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < m; ++k) {
      Sense s = static_cast<Sense>(rng() % 3);
      p.add({r(-3, 3), r(-3, 3)}, s, r(-4, 6));
    }
    // A box keeps every feasible instance bounded.
    p.add({1, 0}, Sense::LessEq, 5);
    p.add({0, 1}, Sense::LessEq, 5);
    Budget b;
    auto s = lp::solve(p, b);
    auto expected = brute_min(p.constraints, p.objective);
    if (!expected) {
      CHECK(s.status == lp::Status::Infeasible);
    } else {
      REQUIRE(s.status == lp::Status::Optimal);
      CHECK(s.value == *expected);
    }
  }
}
