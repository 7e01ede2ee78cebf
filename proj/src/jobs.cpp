#include "arcstab/jobs.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>

#include "arcstab/kstab.hpp"
#include "arcstab/locus.hpp"
#include "arcstab/parser.hpp"
#include "arcstab/sampling.hpp"

namespace arcstab {

namespace {

struct Context {
  Budget& budget;
  std::uint64_t seed;
};

// ---- reading ----

const Json& need(const Json& obj, const char* key) {
  if (!obj.is_object()) throw InputError(std::string("expected an object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

const Json& need_array(const Json& obj, const char* key) {
  const Json& a = need(obj, key);
  if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  return a;
}

std::int64_t integer(const Json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  throw InputError("expected an integer, got " + j.dump());
}

std::uint64_t count(const Json& j) {
  auto n = integer(j);
  if (n < 0) throw InputError("expected a nonnegative integer, got " + j.dump());
  return static_cast<std::uint64_t>(n);
}

Rational rat(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  throw InputError("expected a rational as a string or integer, got " + j.dump());
}

std::vector<Rational> rats(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rat(x));
  return out;
}

std::string text(const Json& j) {
  if (!j.is_string()) throw InputError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

VarList var_list(const Json& j) {
  if (!j.is_array()) throw InputError("variables must be an array of names");
  VarList out;
  for (const auto& v : j) out.push_back(text(v));
  return out;
}

std::vector<MultiPoly> polys(const Json& j, const VarList& vars) {
  if (!j.is_array()) throw InputError("expected an array of polynomial strings");
  std::vector<MultiPoly> out;
  for (const auto& p : j) out.push_back(parse_polynomial(text(p), vars));
  return out;
}

MonomialOrder order_of(const Json& j) {
  if (j.is_string() && j == "grevlex") return MonomialOrder::grevlex();
  if (j.is_string() && j == "lex") return MonomialOrder::lex();
  if (j.is_object() && j.contains("block")) return MonomialOrder::block(count(j["block"]));
  throw InputError("unknown monomial order " + j.dump());
}

GroupPresentation group_of(const Json& j) {
  if (j.is_string()) {
    static const std::regex label(R"((torus|SL|GL)\((\d+)\))");
    std::smatch m;
    const std::string s = j.get<std::string>();
    if (!std::regex_match(s, m, label)) throw InputError("unknown group label '" + s + "'");
    const std::size_t n = std::stoul(m[2].str());
    if (n == 0 || n > 6) throw InputError("group size must be between 1 and 6");
    if (m[1] == "torus") return GroupPresentation::torus(n);
    if (m[1] == "SL") return GroupPresentation::special_linear(n);
    return GroupPresentation::general_linear(n);
  }
  const auto m = count(need(j, "custom"));
  if (m == 0 || m > 6) throw InputError("group size must be between 1 and 6");
  auto ring = GroupPresentation::general_linear(m).vars();
  return GroupPresentation::custom(m, polys(need(j, "relations"), ring));
}

std::vector<Weight> weights_of(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("weights must be a nonempty array of integer vectors");
  std::vector<Weight> out;
  for (const auto& w : j) {
    if (!w.is_array()) throw InputError("each weight must be an array of integers");
    Weight x;
    for (const auto& c : w) x.push_back(integer(c));
    out.push_back(std::move(x));
  }
  return out;
}

PolyMatrix matrix_of(const Json& j, const VarList& ring) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array of rows");
  PolyMatrix m;
  for (const auto& row : j) m.push_back(polys(row, ring));
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InputError("matrix must be square");
  }
  return m;
}

Representation rep_of(const Json& j, const GroupPresentation& g) {
  if (j == "standard") return standard_representation(g);
  if (j == "trivial") return trivial_representation(g);
  if (j.is_object() && j.contains("weights")) return Representation::torus_weights(weights_of(j["weights"]));
  if (j.is_object() && j.contains("sym")) return sym_power(g, static_cast<unsigned>(count(j["sym"])));
  if (j.is_object() && j.contains("matrix")) return Representation::matrix_action(g, matrix_of(j["matrix"], g.vars()));
  throw InputError("unknown representation " + j.dump());
}

Arc arc_of(const Json& j) {
  if (j.is_object() && j.contains("exponents")) {
    std::vector<std::int64_t> a;
    for (const auto& x : j["exponents"]) a.push_back(integer(x));
    return Arc::one_parameter_subgroup(a);
  }
  const Json& rows = need(j, "matrix");
  if (!rows.is_array()) throw InputError("arc matrix must be an array of rows");
  LaurentMatrix m;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rows.size()) throw InputError("arc matrix must be square");
    std::vector<LaurentPoly> r;
    for (const auto& e : row) r.push_back(parse_laurent(text(e)));
    m.push_back(std::move(r));
  }
  return Arc(std::move(m));
}

Pair pair_of(const Json& p) {
  auto g = group_of(need(p, "group"));
  return Pair(g, rep_of(need(p, "V"), g), rep_of(need(p, "W"), g), rats(need(p, "v")), rats(need(p, "w")));
}

Point point_of(const Json& j) { return rats(j); }

Polytope polytope_of(const Json& j) {
  std::vector<Point> pts;
  for (const auto& v : need_array(j, "vertices")) pts.push_back(point_of(v));
  return Polytope::hull(std::move(pts));
}

PLFunction function_of(const Polytope& P, const Json& j) {
  std::vector<AffineFunction> pieces;
  for (const auto& l : need_array(j, "pieces")) {
    pieces.push_back({rats(need(l, "gradient")), l.contains("constant") ? rat(l["constant"]) : Rational(0)});
  }
  return PLFunction(P, std::move(pieces));
}

// ---- writing ----

Json rstr(const Rational& q) { return to_string(q); }

Json rstrs(std::span<const Rational> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(rstr(x));
  return out;
}

Json gens_json(const Ideal& i) { return generator_strings(i); }

Json arc_json(const Arc& a) {
  Json rows = Json::array();
  for (const auto& row : a.matrix()) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    rows.push_back(r);
  }
  return {{"matrix", rows}};
}

Json verdict_json(const Verdict& v) {
  Json out = {{"status", to_string(v.status)}};
  if (v.exponents) out["exponents"] = *v.exponents;
  if (v.arc) out["arc"] = arc_json(*v.arc);
  if (v.mu) out["mu"] = to_string(*v.mu);
  if (v.norm) out["norm"] = std::to_string(*v.norm);
  if (v.level) out["level"] = *v.level;
  if (!v.containment.empty()) {
    Json c = Json::array();
    for (const auto& w : v.containment) {
      Json comb = Json::array();
      for (const auto& [chi, lam] : w.combination) comb.push_back({{"weight", chi}, {"coefficient", rstr(lam)}});
      c.push_back({{"point", w.point}, {"combination", comb}});
    }
    out["containment"] = c;
  }
  return out;
}

Json function_json(const PLFunction& f) {
  Json pieces = Json::array();
  for (const auto& l : f.pieces()) pieces.push_back({{"gradient", rstrs(l.gradient)}, {"constant", rstr(l.constant)}});
  return {{"pieces", pieces}};
}

Json integrals_json(const ToricIntegrals& in) {
  return {{"volume", rstr(in.volume)},
          {"boundary_measure", rstr(in.boundary_measure)},
          {"integral", rstr(in.integral)},
          {"boundary_integral", rstr(in.boundary_integral)},
          {"minimum", rstr(in.minimum)}};
}

// ---- kinds ----

Json algebra_groebner(const Json& p, Context& ctx) {
  VarList vars = var_list(need(p, "vars"));
  Ideal ideal(vars, polys(need(p, "generators"), vars));
  const std::string op = p.contains("op") ? text(p["op"]) : "basis";
  const MonomialOrder order = p.contains("order") ? order_of(p["order"]) : MonomialOrder::grevlex();
  const auto grevlex = MonomialOrder::grevlex();
  Json out;
  if (op == "basis") {
    Ideal gb = groebner(ideal, order, ctx.budget);
    out["generators"] = gens_json(gb);
    out["buchberger_criterion"] = is_groebner_basis(gb.generators(), order);
    out["idempotent"] = groebner(gb, order, ctx.budget) == gb;
  } else if (op == "eliminate") {
    Ideal e = groebner(eliminate(ideal, var_list(need(p, "drop")), ctx.budget), grevlex, ctx.budget);
    out["vars"] = e.vars();
    out["generators"] = gens_json(e);
    out["buchberger_criterion"] = is_groebner_basis(e.generators(), grevlex);
  } else if (op == "saturate") {
    MultiPoly f = parse_polynomial(text(need(p, "by")), vars);
    Ideal s = groebner(saturate(ideal, f, ctx.budget), grevlex, ctx.budget);
    Ideal again = groebner(saturate(s, f, ctx.budget), grevlex, ctx.budget);
    out["generators"] = gens_json(s);
    out["buchberger_criterion"] = is_groebner_basis(s.generators(), grevlex);
    out["idempotent"] = again == s;
  } else if (op == "member") {
    out["member"] = member(parse_polynomial(text(need(p, "f")), vars), ideal, ctx.budget);
  } else if (op == "intersect") {
    Ideal other(vars, polys(need(p, "with"), vars));
    Ideal i = groebner(intersect(ideal, other, ctx.budget), grevlex, ctx.budget);
    out["generators"] = gens_json(i);
    out["buchberger_criterion"] = is_groebner_basis(i.generators(), grevlex);
  } else {
    throw InputError("unknown algebra operation '" + op + "'");
  }
  return out;
}

Json arcs_weight(const Json& p, Context& ctx) {
  if (p.contains("sample")) {
    const Json& s = p["sample"];
    const std::string kind = text(need(s, "kind"));
    const auto n = count(need(s, "count"));
    if (kind == "torus-reduction") {
      auto r = torus_reduction_sample(fixed_torus_pairs(), n, ctx.seed);
      return {{"arcs", r.arcs}, {"comparisons", r.comparisons}, {"agree", r.agree},
              {"all_agree", r.agree == r.comparisons}};
    }
    if (kind == "norm") {
      auto r = norm_sample(n, ctx.seed);
      return {{"arcs", r.arcs},
              {"nonnegative", r.nonnegative},
              {"equivalent_to_identity", r.equivalent_to_identity},
              {"zero_on_identity_class", r.zero_on_identity_class},
              {"holds", r.nonnegative == r.arcs && r.zero_on_identity_class == r.equivalent_to_identity}};
    }
    throw InputError("unknown sample kind '" + kind + "'");
  }
  Pair pair = pair_of(p);
  Arc rho = arc_of(need(p, "arc"));
  Json out = {{"in_group", check_arc(pair.group, rho)},
              {"mu", to_string(mu_weight(pair.V, pair.W, pair.v, pair.w, rho))}};
  try {
    out["norm"] = std::to_string(arc_norm(pair.V, pair.v, rho));
  } catch (const InputError& e) {
    out["norm"] = nullptr;
    out["norm_note"] = e.what();
  }
  return out;
}

Json arcs_equiv(const Json& p, Context&) {
  return {{"equivalent", arcs_equivalent(arc_of(need(p, "a")), arc_of(need(p, "b")))}};
}

Json pairs_check(const Json& p, Context& ctx) {
  if (p.contains("binary_form")) {
    auto coeffs = rats(need(p["binary_form"], "coefficients"));
    auto v = binary_form_stability(coeffs, ctx.budget);
    Json probes = Json::array();
    for (const auto& pr : v.probes) {
      Json root = nullptr;
      if (pr.root) root = {rstr(pr.root->a), rstr(pr.root->b)};
      probes.push_back({{"root", root}, {"moved", rstrs(pr.moved)}, {"verdict", verdict_json(pr.verdict)}});
    }
    Json roots = Json::array();
    for (const auto& r : rational_roots(coeffs)) {
      roots.push_back({{"root", {rstr(r.a), rstr(r.b)}}, {"multiplicity", r.multiplicity}});
    }
    return {{"verdict", to_string(v.status)}, {"probes", probes}, {"roots", roots}};
  }
  Verdict v = torus_semistable(pair_of(p), ctx.budget);
  return {{"verdict", to_string(v.status)}, {"certificate", verdict_json(v)}};
}

Json pairs_stable(const Json& p, Context& ctx) {
  Pair pair = pair_of(p);
  std::int64_t lo = 1, hi = 1;
  const bool search = p.contains("max_level");
  if (search) {
    hi = integer(p["max_level"]);
  } else {
    lo = hi = integer(need(p, "level"));
  }
  if (lo < 1 || hi < lo || hi > 64) throw InputError("levels must lie in 1..64");
  Json results = Json::array();
  std::optional<std::int64_t> least_assoc, least_num;
  for (std::int64_t l = lo; l <= hi; ++l) {
    Verdict a = torus_stable_at(pair, l, ctx.budget);
    Verdict n = dr_stable_at(pair, l, ctx.budget);
    if (a.positive() && !least_assoc) least_assoc = l;
    if (n.positive() && !least_num) least_num = l;
    results.push_back({{"level", l},
                       {"associated", verdict_json(a)},
                       {"numerical", verdict_json(n)},
                       {"numerical_implies_associated", !n.positive() || a.positive()}});
  }
  Json out = {{"results", results}};
  if (search) {
    out["least_level"] = {{"associated", least_assoc ? Json(*least_assoc) : Json(nullptr)},
                          {"numerical", least_num ? Json(*least_num) : Json(nullptr)}};
  }
  return out;
}

Json pairs_falsify(const Json& p, Context& ctx) {
  Pair pair = pair_of(p);
  auto r = sample_falsifier(pair, count(need(p, "draws")), ctx.seed);
  Json out = {{"found", r.arc.has_value()}, {"draws", r.draws}};
  if (r.arc) {
    out["arc"] = arc_json(*r.arc);
    out["mu"] = to_string(*r.mu);
  }
  return out;
}

ActionProblem problem_of(const Json& p, Budget& budget) {
  auto g = group_of(need(p, "group"));
  VarList vars = var_list(need(p, "vars"));
  const Json& a = need(p, "action");
  PolyMatrix action;
  if (a == "standard") {
    action = standard_representation(g).matrix();
  } else if (a.is_object() && a.contains("weights")) {
    action = torus_action_matrix(g, weights_of(a["weights"]));
  } else {
    action = matrix_of(need(a, "matrix"), g.vars());
  }
  Ideal Y(vars, p.contains("Y") ? polys(p["Y"], vars) : std::vector<MultiPoly>{});
  Ideal target(vars, polys(need(p, "target"), vars));
  const bool projective = p.contains("projective") && p["projective"].get<bool>();
  return ActionProblem(g, vars, std::move(action), Y, target, projective, budget);
}

Json locus_map(const Json& p, Context& ctx) {
  auto prob = problem_of(p, ctx.budget);
  Ideal graph = graph_ideal(prob);
  Ideal z = orbit_map_closure(prob, ctx.budget);
  return {{"graph_vars", graph.vars()}, {"graph", gens_json(graph)}, {"closure_vars", z.vars()},
          {"closure", gens_json(z)}};
}

Json locus_degeneration(const Json& p, Context& ctx) {
  auto prob = problem_of(p, ctx.budget);
  std::vector<std::vector<Rational>> probes;
  if (p.contains("probes")) {
    for (const auto& x : p["probes"]) probes.push_back(rats(x));
  }
  auto r = degeneration_locus(prob, probes, ctx.budget);
  Json oracle = Json::array();
  for (const auto& row : r.oracle) {
    oracle.push_back({{"point", rstrs(row.point)}, {"degenerates", row.degenerates}, {"in_locus", row.in_locus}});
  }
  return {{"vars", prob.y1},
          {"locus", gens_json(r.locus)},
          {"oracle", oracle},
          {"overapproximation", r.overapproximation},
          {"sound", r.sound}};
}

Json locus_oracle(const Json& p, Context& ctx) {
  auto prob = problem_of(p, ctx.budget);
  return {{"degenerates", point_degenerates(prob, rats(need(p, "point")), ctx.budget)}};
}

Json locus_family(const Json& p, Context& ctx) {
  auto g = group_of(need(p, "group"));
  VarList base = var_list(need(p, "base"));
  PairFamily fam{g, rep_of(need(p, "V"), g), rep_of(need(p, "W"), g), base, polys(need(p, "v"), base),
                 polys(need(p, "w"), base)};
  auto loc = family_unstable_locus(fam, ctx.budget);
  Json pieces = Json::array();
  for (const auto& i : loc.pieces) pieces.push_back(gens_json(i));
  Json strata = Json::array();
  for (const auto& s : loc.strata) {
    strata.push_back({{"closure", gens_json(s.closure)}, {"vanishing", s.vanishing}, {"nonvanishing", s.nonvanishing}});
  }
  Json out = {{"pieces", pieces}, {"strata", strata}};
  if (p.contains("fiber_checks")) {
    const auto n = count(p["fiber_checks"]);
    std::mt19937_64 rng(ctx.seed);
    std::size_t checked = 0, agree = 0, piece_agree = 0;
    // Points where v vanishes are not pairs and are redrawn.
    for (std::uint64_t attempt = 0; checked < n && attempt < 10 * n + 10; ++attempt) {
      std::vector<Rational> b(base.size());
      for (auto& x : b) x = make_rational(draw(rng, -6, 6), draw(rng, 1, 4));
      std::optional<Pair> fiber;
      try {
        fiber = fam.fiber(b);
      } catch (const InputError&) {
        continue;
      }
      ++checked;
      bool unstable = torus_semistable(*fiber, ctx.budget).status == VerdictStatus::Unstable;
      agree += loc.contains(fam, b) == unstable;
      bool in_pieces = std::any_of(loc.pieces.begin(), loc.pieces.end(), [&](const Ideal& i) { return i.vanishes_at(b); });
      piece_agree += in_pieces == unstable;
    }
    out["fiber_checks"] = {{"total", checked}, {"agree", agree}, {"agree_with_pieces", piece_agree}};
  }
  return out;
}

Json toric_hilb_job(const Json& p, Context&) {
  auto h = toric_hilb(polytope_of(need(p, "polytope")));
  return {{"a0", rstr(h.a0)}, {"a1", rstr(h.a1)}};
}

Json toric_df_job(const Json& p, Context&) {
  auto P = polytope_of(need(p, "polytope"));
  auto f = function_of(P, need(p, "function"));
  auto h = toric_hilb(P);
  auto b = toric_model_numbers(P, f);
  return {{"value", rstr(df_invariant(h, b))},
          {"a0", rstr(h.a0)},
          {"a1", rstr(h.a1)},
          {"b0", rstr(b.b0)},
          {"b1", rstr(b.b1)},
          {"integrals", integrals_json(toric_integrals(P, f))}};
}

Json toric_norm_job(const Json& p, Context&) {
  auto P = polytope_of(need(p, "polytope"));
  auto f = function_of(P, need(p, "function"));
  return {{"value", rstr(toric_minnorm(P, f))}, {"integrals", integrals_json(toric_integrals(P, f))}};
}

Json toric_uniform_job(const Json& p, Context& ctx) {
  auto P = polytope_of(need(p, "polytope"));
  std::vector<Crease> creases;
  if (p.contains("creases")) {
    for (const auto& c : p["creases"]) creases.push_back({rats(need(c, "normal")), rat(need(c, "offset"))});
  }
  const Rational eps = rat(need(p, "epsilon"));
  auto r = toric_uniform_search(P, creases, eps, ctx.budget);
  Json out = {{"verdict", r.fails ? "fails-at-epsilon" : "holds-on-family"},
              {"minimum", rstr(r.minimum)},
              {"coefficients", rstrs(r.coefficients)}};
  if (r.certificate) {
    out["certificate"] = function_json(*r.certificate);
    out["certificate_df"] = rstr(r.certificate_df);
    out["certificate_minnorm"] = rstr(r.certificate_minnorm);
  }
  return out;
}

ModelNumbers model_of(const Json& j) {
  ModelNumbers b;
  b.b0 = j.contains("b0") ? rat(j["b0"]) : Rational(0);
  b.b1 = j.contains("b1") ? rat(j["b1"]) : Rational(0);
  if (j.contains("r")) b.r = rat(j["r"]);
  if (j.contains("n")) b.n = static_cast<int>(integer(j["n"]));
  if (j.contains("l_mix")) b.l_mix = rat(j["l_mix"]);
  if (j.contains("l_top")) b.l_top = rat(j["l_top"]);
  if (j.contains("L_n")) b.L_n = rat(j["L_n"]);
  return b;
}

Json model_df_job(const Json& p, Context&) {
  HilbCoeffs a{rat(need(p, "a0")), rat(need(p, "a1"))};
  return {{"value", rstr(df_invariant(a, model_of(p)))}};
}

Json model_norm_job(const Json& p, Context&) { return {{"value", rstr(model_norm(model_of(p)))}}; }

using Handler = std::function<Json(const Json&, Context&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"algebra.groebner", algebra_groebner}, {"arcs.weight", arcs_weight},
      {"arcs.equiv", arcs_equiv},             {"pairs.check", pairs_check},
      {"pairs.stable", pairs_stable},         {"pairs.falsify", pairs_falsify},
      {"locus.map", locus_map},               {"locus.degeneration", locus_degeneration},
      {"locus.oracle", locus_oracle},         {"locus.family", locus_family},
      {"toric.hilb", toric_hilb_job},         {"toric.df", toric_df_job},
      {"toric.norm", toric_norm_job},         {"toric.uniform", toric_uniform_job},
      {"model.df", model_df_job},             {"model.norm", model_norm_job},
  };
  return table;
}

Json error_report(const char* type, const std::string& message, std::optional<std::size_t> position = {}) {
  Json err = {{"type", type}, {"message", message}};
  if (position) err["position"] = *position;
  return {{"version", kSchemaVersion}, {"status", "error"}, {"error", err}};
}

}  // namespace

Json run_job(const Json& doc, const RunOptions& opts) {
  if (!doc.is_object()) throw InputError("job document must be a JSON object");
  if (integer(need(doc, "version")) != kSchemaVersion) throw InputError("unsupported schema version");
  const std::string kind = text(need(doc, "kind"));
  auto it = handlers().find(kind);
  if (it == handlers().end()) throw InputError("unknown job kind '" + kind + "'");
  const Json& payload = need(doc, "payload");
  if (!payload.is_object()) throw InputError("payload must be an object");

  Budget budget(opts.budget ? *opts.budget : doc.contains("budget") ? count(doc["budget"]) : Budget::kDefaultSteps);
  const std::uint64_t seed = opts.seed ? *opts.seed : doc.contains("seed") ? count(doc["seed"]) : 0;
  Context ctx{budget, seed};
  const auto start = std::chrono::steady_clock::now();
  Json result = it->second(payload, ctx);
  Json report = {{"version", kSchemaVersion},
                 {"kind", kind},
                 {"status", "ok"},
                 {"result", std::move(result)},
                 {"seed", seed},
                 {"budget", {{"limit", budget.limit()}, {"used", budget.used()}}},
                 {"module_version", kLibraryVersion}};
  if (doc.contains("id")) report["id"] = doc["id"];
  if (opts.timing) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    report["timing_us"] = us.count();
  }
  return report;
}

JobOutcome run_job_checked(const Json& doc, const RunOptions& opts) {
  try {
    return {0, run_job(doc, opts)};
  } catch (const ParseError& e) {
    return {2, error_report("parse", e.what(), e.position())};
  } catch (const InputError& e) {
    return {2, error_report("input", e.what())};
  } catch (const Json::exception& e) {
    return {2, error_report("input", e.what())};
  } catch (const BudgetExceeded& e) {
    return {3, error_report("budget", e.what())};
  }
}

JobOutcome run_job_text(const std::string& text, const RunOptions& opts) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    return {2, error_report("parse", e.what(), e.byte)};
  }
  return run_job_checked(doc, opts);
}

CorpusSummary run_corpus(const std::filesystem::path& dir, const RunOptions& opts) {
  CorpusSummary out;
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(dir)) {
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    out.exit_code = 2;
    return out;
  }
  for (const auto& f : files) {
    CorpusEntry entry;
    entry.file = f.filename().string();
    std::ifstream in(f);
    std::stringstream buf;
    buf << in.rdbuf();
    Json doc;
    try {
      doc = Json::parse(buf.str());
      entry.id = doc.value("id", entry.file);
      entry.criterion = text(need(doc, "criterion"));
      const Json& expect = need(doc, "expect");
      auto outcome = run_job_checked(need(doc, "job"), opts);
      entry.pass = true;
      for (const auto& [ptr, value] : expect.items()) {
        Json::json_pointer jp(ptr);
        if (ptr == "/exit_code") {
          if (outcome.exit_code != value) {
            entry.pass = false;
            entry.detail += ptr + " = " + std::to_string(outcome.exit_code) + "; ";
          }
          continue;
        }
        if (!outcome.report.contains(jp) || outcome.report.at(jp) != value) {
          entry.pass = false;
          entry.detail += ptr + " = " + (outcome.report.contains(jp) ? outcome.report.at(jp).dump() : "missing") +
                          ", expected " + value.dump() + "; ";
        }
      }
    } catch (const std::exception& e) {
      entry.pass = false;
      entry.detail = e.what();
      if (entry.criterion.empty()) entry.criterion = "?";
    }
    auto [it, inserted] = out.criteria.emplace(entry.criterion, entry.pass);
    if (!inserted) it->second = it->second && entry.pass;
    out.entries.push_back(std::move(entry));
  }
  out.exit_code = std::all_of(out.criteria.begin(), out.criteria.end(), [](const auto& c) { return c.second; }) ? 0 : 1;
  return out;
}

std::string format_summary(const CorpusSummary& summary) {
  std::ostringstream os;
  if (summary.entries.empty()) {
    os << "corpus is empty\n";
    return os.str();
  }
  // Criteria in numeric order: A1, A2, ..., A10.
  auto by_criterion = [](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::vector<const CorpusEntry*> entries;
  for (const auto& e : summary.entries) entries.push_back(&e);
  std::stable_sort(entries.begin(), entries.end(),
                   [&](const auto* a, const auto* b) { return by_criterion(a->criterion, b->criterion); });
  for (const auto* e : entries) {
    os << (e->pass ? "ok   " : "FAIL ") << e->criterion << ' ' << e->id;
    if (!e->detail.empty()) os << "  (" << e->detail << ')';
    os << '\n';
  }
  std::vector<std::pair<std::string, bool>> rows(summary.criteria.begin(), summary.criteria.end());
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return by_criterion(a.first, b.first); });
  for (const auto& [c, pass] : rows) os << c << ' ' << (pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace arcstab
