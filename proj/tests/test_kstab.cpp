#include <random>

#include "doctest.h"

#include "arcstab/group.hpp"
#include "arcstab/kstab.hpp"

using namespace arcstab;

namespace {

Polytope poly(std::vector<std::pair<int, int>> vs) {
  std::vector<Point> pts;
  for (auto [x, y] : vs) pts.push_back({Rational(x), Rational(y)});
  return Polytope::hull(pts);
}

Polytope interval(Rational a, Rational b) { return Polytope::hull({{a}, {b}}); }

PLFunction affine(const Polytope& P, Point g, Rational c = 0) { return PLFunction(P, {{std::move(g), c}}); }

// Lattice points of a lattice polygon, by the edge sign test.
long count_points(const std::vector<Point>& v, long k) {
  Rational lo_x = v[0][0], hi_x = v[0][0], lo_y = v[0][1], hi_y = v[0][1];
  for (const auto& p : v) {
    lo_x = std::min(lo_x, p[0]);
    hi_x = std::max(hi_x, p[0]);
    lo_y = std::min(lo_y, p[1]);
    hi_y = std::max(hi_y, p[1]);
  }
  long count = 0;
  for (long x = lo_x.get_num().get_si() * k; x <= hi_x.get_num().get_si() * k; ++x) {
    for (long y = lo_y.get_num().get_si() * k; y <= hi_y.get_num().get_si() * k; ++y) {
      bool in = true;
      for (std::size_t i = 0; i < v.size() && in; ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        Rational c = (k * b[0] - k * a[0]) * (y - k * a[1]) - (k * b[1] - k * a[1]) * (x - k * a[0]);
        in = c >= 0;
      }
      count += in;
    }
  }
  return count;
}

PLFunction random_pl(std::mt19937_64& rng, const Polytope& P) {
  std::vector<AffineFunction> pieces;
  const auto n = static_cast<std::size_t>(P.dim());
  for (auto k = draw(rng, 1, 4); k > 0; --k) {
    Point g(n);
    for (auto& x : g) x = make_rational(draw(rng, -3, 3), draw(rng, 1, 2));
    pieces.push_back({g, Rational(draw(rng, -3, 3))});
  }
  return PLFunction(P, pieces);
}

}  // namespace

TEST_CASE("df_invariant and model_norm") {
  CHECK(df_invariant({1, 1}, {Rational(-1, 4), Rational(-1, 2)}) == Rational(1, 4));
  CHECK(df_invariant({3, 5}, {0, 0}) == 0);
  CHECK_THROWS_AS(df_invariant({0, 1}, {1, 1}), InputError);

  ModelNumbers m;
  m.l_mix = 5;
  m.l_top = 5;
  m.L_n = 2;
  CHECK(model_norm(m) == 0);
  m.l_mix = 3;
  m.l_top = 1;
  m.L_n = 1;
  CHECK(model_norm(m) == 1);
  m.l_mix = 0;
  m.l_top = -2;
  m.L_n = 2;
  m.r = 2;
  CHECK(model_norm(m) == Rational(1, 4));
  CHECK_THROWS_AS(model_norm(ModelNumbers{}), InputError);
}

TEST_CASE("hull and hilbert coefficients") {
  auto unit = interval(0, 1);
  CHECK(toric_hilb(unit).a0 == 1);
  CHECK(toric_hilb(unit).a1 == 1);
  auto simplex = poly({{0, 0}, {1, 0}, {0, 1}});
  CHECK(toric_hilb(simplex).a0 == Rational(1, 2));
  CHECK(toric_hilb(simplex).a1 == Rational(3, 2));
  auto square = poly({{1, 1}, {0, 0}, {1, 0}, {0, 1}, {1, 0}});
  CHECK(square.vertices() == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(toric_hilb(square).a0 == 1);
  CHECK(toric_hilb(square).a1 == 2);
  CHECK(poly({{0, 0}, {1, 1}, {2, 2}, {0, 2}}).vertices().size() == 3);
  CHECK_THROWS_AS(poly({{0, 0}, {1, 1}, {2, 2}}), InputError);
  CHECK_THROWS_AS(interval(1, 1), InputError);
  CHECK(lattice_length({0, 0}, {2, 4}) == 2);
  CHECK(lattice_length({0, 0}, {Rational(1, 2), Rational(3, 2)}) == Rational(1, 2));
}

TEST_CASE("Ehrhart counts match the Hilbert coefficients") {
  std::vector<Polytope> ps = {poly({{0, 0}, {1, 0}, {0, 1}}), poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
                              poly({{0, 0}, {2, 0}, {0, 1}}), poly({{0, 0}, {3, 1}, {1, 2}}),
                              poly({{-1, 0}, {2, -1}, {3, 2}, {0, 3}, {-2, 2}})};
  for (const auto& P : ps) {
    auto h = toric_hilb(P);
    for (long k = 1; k <= 6; ++k) CHECK(Rational(count_points(P.vertices(), k)) == h.a0 * k * k + h.a1 * k + 1);
  }
  auto seg = interval(-2, 3);
  auto h = toric_hilb(seg);
  for (long k = 1; k <= 6; ++k) CHECK(Rational(5 * k + 1) == h.a0 * k + h.a1);
}

TEST_CASE("toric DF golden values") {
  auto unit = interval(0, 1);
  PLFunction crease(unit, {{{0}, 0}, {{2}, -1}});
  auto in = toric_integrals(unit, crease);
  CHECK(in.integral == Rational(1, 4));
  CHECK(in.boundary_integral == 1);
  CHECK(toric_df(unit, crease) == Rational(1, 4));
  CHECK(toric_minnorm(unit, crease) == Rational(1, 4));
  CHECK(toric_minnorm(unit, affine(unit, {1})) == Rational(1, 2));

  auto simplex = poly({{0, 0}, {1, 0}, {0, 1}});
  auto x = affine(simplex, {1, 0});
  CHECK(toric_integrals(simplex, x).integral == Rational(1, 6));
  CHECK(toric_integrals(simplex, x).boundary_integral == 1);
  CHECK(toric_df(simplex, x) == 0);

  auto tri = poly({{0, 0}, {2, 0}, {0, 1}});
  auto in2 = toric_integrals(tri, affine(tri, {1, 0}));
  CHECK(in2.volume == 1);
  CHECK(in2.boundary_measure == 4);
  CHECK(in2.integral == Rational(2, 3));
  CHECK(in2.boundary_integral == 3);
  CHECK(toric_df(tri, affine(tri, {1, 0})) == Rational(1, 6));
  CHECK(toric_df(tri, affine(tri, {-1, 0}, 5)) == Rational(-1, 6));
  for (const auto* P : {&unit, &simplex, &tri}) {
    Point zero(static_cast<std::size_t>(P->dim()), 0);
    CHECK(toric_df(*P, affine(*P, zero, Rational(7, 3))) == 0);
    CHECK(toric_minnorm(*P, affine(*P, zero, Rational(-2))) == 0);
  }
}

TEST_CASE("PL functions drop inactive pieces") {
  auto unit = interval(0, 1);
  PLFunction f(unit, {{{0}, 0}, {{1}, -5}, {{0}, 0}, {{2}, -1}});
  CHECK(f.pieces().size() == 2);
  auto square = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  PLFunction g(square, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, -3}});
  CHECK(g.pieces().size() == 2);
  // max(x, y) on the unit square: ∫ = 2/3.
  CHECK(toric_integrals(square, g).integral == Rational(2, 3));
}

TEST_CASE("DF linearity, constants and minnorm sign on random functions") {
  std::mt19937_64 rng(99);
  std::vector<Polytope> ps = {interval(Rational(-1, 2), 2), poly({{0, 0}, {2, 0}, {0, 1}}),
                              poly({{-1, 0}, {2, -1}, {3, 2}, {0, 3}, {-2, 2}})};
  for (const auto& P : ps) {
    const auto n = static_cast<std::size_t>(P.dim());
    for (int k = 0; k < 25; ++k) {
      auto f = random_pl(rng, P);
      auto g = random_pl(rng, P);
      // f + g as a max over pairwise sums.
      std::vector<AffineFunction> sum;
      for (const auto& a : f.pieces()) {
        for (const auto& b : g.pieces()) {
          AffineFunction s{a.gradient, a.constant + b.constant};
          for (std::size_t i = 0; i < n; ++i) s.gradient[i] += b.gradient[i];
          sum.push_back(s);
        }
      }
      PLFunction fg(P, sum);
      CHECK(toric_df(P, fg) == toric_df(P, f) + toric_df(P, g));
      std::vector<AffineFunction> scaled;
      for (auto l : f.pieces()) {
        for (auto& x : l.gradient) x *= 3;
        l.constant = 3 * l.constant + 11;
        scaled.push_back(l);
      }
      PLFunction f3(P, scaled);
      CHECK(toric_df(P, f3) == 3 * toric_df(P, f));
      CHECK(toric_minnorm(P, f3) == 3 * toric_minnorm(P, f));
      auto mn = toric_minnorm(P, f);
      CHECK(mn >= 0);
      bool constant = f.pieces().size() == 1 &&
                      std::all_of(f.pieces()[0].gradient.begin(), f.pieces()[0].gradient.end(),
                                  [](const Rational& x) { return x == 0; });
      CHECK((mn == 0) == constant);
    }
  }
}

TEST_CASE("lattice invariance") {
  std::mt19937_64 rng(5);
  auto P = poly({{0, 0}, {2, 0}, {1, 3}, {-1, 1}});
  int tested = 0;
  while (tested < 30) {
    std::int64_t a = draw(rng, -2, 2), b = draw(rng, -2, 2), c = draw(rng, -2, 2), d = draw(rng, -2, 2);
    std::int64_t det = a * d - b * c;
    if (det != 1 && det != -1) continue;
    ++tested;
    Point t = {Rational(draw(rng, -3, 3)), Rational(draw(rng, -3, 3))};
    std::vector<Point> image;
    for (const auto& v : P.vertices()) image.push_back({a * v[0] + b * v[1] + t[0], c * v[0] + d * v[1] + t[1]});
    auto Q = Polytope::hull(image);
    auto f = random_pl(rng, P);
    // f'(y) = f(U^{-1}(y - t)); gradients transform by U^{-T}.
    std::vector<AffineFunction> moved;
    for (const auto& l : f.pieces()) {
      Rational g0 = (d * l.gradient[0] - c * l.gradient[1]) / det;
      Rational g1 = (-b * l.gradient[0] + a * l.gradient[1]) / det;
      moved.push_back({{g0, g1}, l.constant - g0 * t[0] - g1 * t[1]});
    }
    PLFunction g(Q, moved);
    CHECK(toric_df(Q, g) == toric_df(P, f));
    CHECK(toric_minnorm(Q, g) == toric_minnorm(P, f));
    CHECK(toric_hilb(Q).a1 == toric_hilb(P).a1);
  }
}

TEST_CASE("uniform search") {
  Budget budget;
  auto unit = interval(0, 1);
  std::vector<Crease> half = {{{1}, Rational(1, 2)}};
  auto holds = toric_uniform_search(unit, half, 0, budget);
  CHECK_FALSE(holds.fails);
  CHECK(holds.minimum == 0);

  for (Rational eps : {Rational(1, 10), Rational(1, 1000), Rational(3)}) {
    auto r = toric_uniform_search(unit, half, eps, budget);
    CHECK(r.fails);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->pieces().size() == 1);
    CHECK(r.certificate_df == 0);
    CHECK(r.certificate_minnorm == Rational(1, 2));
    CHECK(r.certificate_df - eps * r.certificate_minnorm < 0);
  }

  auto tri = poly({{0, 0}, {2, 0}, {0, 1}});
  auto r = toric_uniform_search(tri, {}, 0, budget);
  CHECK(r.fails);
  CHECK(r.minimum == Rational(-1, 2));
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->pieces().size() == 1);
  CHECK(r.certificate_df == Rational(-1, 6));
  CHECK(toric_df(tri, *r.certificate) == Rational(-1, 6));

  auto square = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  std::vector<Crease> cs = {{{1, 0}, Rational(1, 2)}, {{0, 1}, Rational(1, 3)}, {{1, 1}, 1}};
  auto sq = toric_uniform_search(square, cs, Rational(1, 5), budget);
  CHECK(sq.fails);
  CHECK(sq.certificate_df - Rational(1, 5) * sq.certificate_minnorm < 0);

  CHECK_THROWS_AS(toric_uniform_search(unit, {{{1}, 2}}, 0, budget), InputError);
  CHECK_THROWS_AS(toric_uniform_search(unit, {{{0}, 0}}, 0, budget), InputError);
}
