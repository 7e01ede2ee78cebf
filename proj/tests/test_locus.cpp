#include <random>

#include "doctest.h"

#include "arcstab/locus.hpp"
#include "arcstab/parser.hpp"

using namespace arcstab;

namespace {

Ideal ideal_of(const VarList& vars, std::vector<std::string> gens) {
  std::vector<MultiPoly> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(g, vars));
  return Ideal(vars, std::move(ps));
}

Ideal reduced(const Ideal& i) { return groebner(i, MonomialOrder::grevlex()); }

ActionProblem cstar_plane(Budget& budget, bool projective = false, std::vector<std::string> target = {"x", "y"}) {
  auto t = GroupPresentation::torus(1);
  VarList vars = {"x", "y"};
  return ActionProblem(t, vars, torus_action_matrix(t, {{1}, {-1}}), Ideal(vars), ideal_of(vars, target),
                       projective, budget);
}

ActionProblem scaling_line(Budget& budget) {
  auto gl1 = GroupPresentation::general_linear(1);
  VarList vars = {"x"};
  return ActionProblem(gl1, vars, {{gl1.entry(0, 0)}}, Ideal(vars), ideal_of(vars, {"x"}), false, budget);
}

std::vector<std::vector<Rational>> grid() {
  std::vector<std::vector<Rational>> out;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) out.push_back({Rational(a), Rational(b)});
  }
  return out;
}

}  // namespace

TEST_CASE("graph ideal") {
  Budget budget;
  auto prob = cstar_plane(budget);
  Ideal g = graph_ideal(prob);
  CHECK(g.vars() == VarList{"g11", "ginv", "x", "y", "x_2", "y_2"});
  CHECK(same_ideal(g, ideal_of(g.vars(), {"x_2 - g11*x", "y_2 - ginv*y", "g11*ginv - 1"}), budget));

  auto triv = GroupPresentation::custom(1, {parse_polynomial("g11 - 1", GroupPresentation::general_linear(1).vars())});
  VarList vars = {"y"};
  ActionProblem tp(triv, vars, {{MultiPoly::constant(triv.vars(), 1)}}, Ideal(vars), ideal_of(vars, {"y"}), false,
                   budget);
  Ideal tg = eliminate(graph_ideal(tp), triv.vars(), budget);
  CHECK(same_ideal(tg, ideal_of(tg.vars(), {"y_2 - y"}), budget));

  auto sp = scaling_line(budget);
  Ideal sg = graph_ideal(sp);
  CHECK(same_ideal(sg, ideal_of(sg.vars(), {"x_2 - g11*x", "g11*ginv - 1"}), budget));
}

TEST_CASE("orbit map closure") {
  Budget budget;
  auto prob = cstar_plane(budget);
  Ideal z = orbit_map_closure(prob, budget);
  CHECK(z == reduced(ideal_of(z.vars(), {"x_2*y_2 - x*y"})));

  auto triv = GroupPresentation::custom(
      2, {parse_polynomial("g11 - 1", GroupPresentation::general_linear(2).vars()),
          parse_polynomial("g22 - 1", GroupPresentation::general_linear(2).vars()),
          parse_polynomial("g12", GroupPresentation::general_linear(2).vars()),
          parse_polynomial("g21", GroupPresentation::general_linear(2).vars())});
  VarList vars = {"x", "y"};
  PolyMatrix ident = {{triv.entry(0, 0), triv.entry(0, 1)}, {triv.entry(1, 0), triv.entry(1, 1)}};
  ActionProblem tp(triv, vars, ident, Ideal(vars), ideal_of(vars, {"x", "y"}), false, budget);
  Ideal tz = orbit_map_closure(tp, budget);
  CHECK(tz == reduced(ideal_of(tz.vars(), {"x_2 - x", "y_2 - y"})));
  // Trivial group: the locus is the target itself.
  auto report = degeneration_locus(tp, grid(), budget);
  CHECK(report.locus == reduced(ideal_of(vars, {"x", "y"})));
  CHECK_FALSE(report.overapproximation);

  Ideal sz = orbit_map_closure(scaling_line(budget), budget);
  CHECK(sz.has_no_generators());
}

TEST_CASE("orbit map closure contains sampled incidences") {
  Budget budget;
  std::mt19937_64 rng(11);
  auto sl2 = GroupPresentation::special_linear(2);
  VarList vars = {"x", "y"};
  PolyMatrix std_action = {{sl2.entry(0, 0), sl2.entry(0, 1)}, {sl2.entry(1, 0), sl2.entry(1, 1)}};
  ActionProblem prob(sl2, vars, std_action, Ideal(vars), ideal_of(vars, {"x", "y"}), false, budget);
  Ideal z = orbit_map_closure(prob, budget);
  for (int k = 0; k < 20; ++k) {
    auto g = sl2.sample_point(rng);
    std::vector<Rational> y = {Rational(draw(rng, -3, 3)), Rational(draw(rng, -3, 3))};
    std::vector<Rational> pt = y;
    for (std::size_t i = 0; i < 2; ++i) pt.push_back(g[i][0] * y[0] + g[i][1] * y[1]);
    CHECK(z.vanishes_at(pt));
  }
  auto cs = cstar_plane(budget);
  Ideal cz = orbit_map_closure(cs, budget);
  for (int k = 1; k <= 5; ++k) {
    Rational s(k, 3);
    std::vector<Rational> y = {Rational(draw(rng, -3, 3)), Rational(draw(rng, -3, 3))};
    CHECK(cz.vanishes_at(std::vector<Rational>{y[0], y[1], s * y[0], y[1] / s}));
  }
}

TEST_CASE("nullcone by elimination") {
  Budget budget;
  auto prob = cstar_plane(budget);
  auto report = degeneration_locus(prob, grid(), budget);
  CHECK(report.locus == reduced(ideal_of({"x", "y"}, {"x*y"})));
  CHECK(report.sound);
  CHECK_FALSE(report.overapproximation);
  for (const auto& row : report.oracle) {
    CHECK(row.degenerates == (row.point[0] * row.point[1] == 0));
    CHECK(row.in_locus == row.degenerates);
  }
}

TEST_CASE("point_degenerates") {
  Budget budget;
  auto prob = cstar_plane(budget);
  CHECK_FALSE(point_degenerates(prob, std::vector<Rational>{1, 1}, budget));
  CHECK(point_degenerates(prob, std::vector<Rational>{1, 0}, budget));
  CHECK(point_degenerates(prob, std::vector<Rational>{0, 0}, budget));
  VarList vars = {"x", "y"};
  auto t = GroupPresentation::torus(1);
  ActionProblem on_curve(t, vars, torus_action_matrix(t, {{1}, {-1}}), ideal_of(vars, {"x*y"}),
                         ideal_of(vars, {"x", "y"}), false, budget);
  CHECK_THROWS_AS(point_degenerates(on_curve, std::vector<Rational>{1, 1}, budget), InputError);
  CHECK_THROWS_AS(ActionProblem(t, vars, torus_action_matrix(t, {{1}, {-1}}), ideal_of(vars, {"x*y"}),
                                ideal_of(vars, {"x - 1"}), false, budget),
                  InputError);
}

TEST_CASE("scaling line") {
  Budget budget;
  auto prob = scaling_line(budget);
  std::vector<std::vector<Rational>> probes = {{Rational(0)}, {Rational(1)}, {Rational(-5, 2)}};
  auto report = degeneration_locus(prob, probes, budget);
  CHECK(report.locus.has_no_generators());
  for (const auto& row : report.oracle) CHECK(row.degenerates);
  CHECK_FALSE(report.overapproximation);
}

TEST_CASE("projective line overapproximation") {
  Budget budget;
  auto prob = cstar_plane(budget, true, {"x"});
  std::vector<std::vector<Rational>> probes = {{1, 0}, {0, 1}, {1, 1}};
  auto report = degeneration_locus(prob, probes, budget);
  CHECK(report.locus.has_no_generators());
  CHECK(report.sound);
  CHECK(report.overapproximation);
  CHECK_FALSE(report.oracle[0].degenerates);
  CHECK(report.oracle[0].in_locus);
  CHECK(report.oracle[1].degenerates);
  CHECK(report.oracle[2].degenerates);
}

TEST_CASE("family unstable locus") {
  Budget budget;
  auto t = GroupPresentation::torus(1);
  VarList base = {"b"};
  PairFamily fam{t,
                 Representation::torus_weights({{0}, {2}}),
                 Representation::torus_weights({{1}}),
                 base,
                 {parse_polynomial("b", base), MultiPoly::constant(base, 1)},
                 {MultiPoly::constant(base, 1)}};
  auto locus = family_unstable_locus(fam, budget);
  REQUIRE(locus.pieces.size() == 1);
  CHECK(locus.pieces[0] == ideal_of(base, {"b"}));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    std::vector<Rational> b = {make_rational(draw(rng, -4, 4), draw(rng, 1, 3))};
    bool unstable = torus_semistable(fam.fiber(b), budget).status == VerdictStatus::Unstable;
    CHECK(locus.contains(fam, b) == unstable);
    CHECK(locus.pieces[0].vanishes_at(b) == unstable);
  }

  PairFamily stable{t, fam.V, fam.W, base, {MultiPoly::constant(base, 1), MultiPoly::constant(base, 1)},
                    {parse_polynomial("b", base)}};
  CHECK(family_unstable_locus(stable, budget).pieces.empty());
  PairFamily unstable{t, fam.V, fam.W, base, {MultiPoly(base), MultiPoly::constant(base, 1)},
                      {MultiPoly::constant(base, 1)}};
  auto all = family_unstable_locus(unstable, budget);
  REQUIRE(all.pieces.size() == 1);
  CHECK(all.pieces[0].has_no_generators());

  // Two parameters: v = (a, b), w = a + b; unstable where a or b vanishes but
  // a + b does not. The closures cover the axes.
  VarList ab = {"a", "b"};
  PairFamily two{t, fam.V, fam.W, ab, {parse_polynomial("a", ab), parse_polynomial("b", ab)},
                 {parse_polynomial("a + b", ab)}};
  auto loc2 = family_unstable_locus(two, budget);
  CHECK(loc2.pieces.size() == 2);
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      std::vector<Rational> pt = {a, b};
      if (a == 0 && b == 0) continue;
      bool unstable = torus_semistable(two.fiber(pt), budget).status == VerdictStatus::Unstable;
      CHECK(loc2.contains(two, pt) == unstable);
    }
  }
  CHECK_THROWS_AS(family_unstable_locus(PairFamily{GroupPresentation::special_linear(2), fam.V, fam.W, base, fam.v,
                                                   fam.w},
                                        budget),
                  InputError);
}
