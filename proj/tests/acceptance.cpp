// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qplane/catalog.hpp"
#include "qplane/jordan.hpp"
#include "qplane/rep.hpp"
#include "qplane/solver.hpp"
#include "random_nc.hpp"

using namespace qplane;

namespace {

constexpr double kNumericTol = 1e-12;

struct Item {
  std::string what;
  bool pass;
};

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<Item>()> body;
  double time_limit_s = 0.0;  // 0: no limit
};

const ScalarExpr q = ScalarExpr::q();

NCElement el(const ScalarExpr& c) { return NCElement(Presentation::uv(), c); }

bool all_entries(const ScalarMatrix& m, const std::function<bool(const ScalarExpr&)>& pred) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!pred(m(i, j))) return false;
    }
  }
  return true;
}

/// Nonzero, polynomial in zeta, zero at zeta = 0.
bool zeta_polynomial_vanishing_at_zero(const ScalarMatrix& m) {
  return !m.is_zero() && m.substitute(Var::z, ScalarExpr(0)).is_zero() &&
         all_entries(m, [](const ScalarExpr& e) { return !e.denominator().depends_on(Var::z); });
}

std::vector<Item> pattern(const ConditionReport& rep, std::initializer_list<const char*> pass,
                          std::initializer_list<const char*> fail) {
  std::vector<Item> out;
  for (const char* n : pass) out.push_back({std::string(n) + " passes", rep.at(n).pass});
  for (const char* n : fail) out.push_back({std::string(n) + " fails", !rep.at(n).pass});
  return out;
}

TwoFormMatrix two_forms(const std::array<ScalarExpr, 4>& m, const NCElement& f) {
  TwoFormMatrix out = zero_two_forms();
  for (std::size_t k = 0; k < 4; ++k) out[k / 2][k % 2] = TwoForm{el(m[k]) * f};
  return out;
}

std::vector<Item> criterion1() {
  const SolutionEntry e = catalog_entry("I", ScalarExpr(0));
  const ConditionReport rep = check_all(e.flip, e.metric);
  std::vector<Item> out = pattern(rep, {"SP", "Pg", "compat", "j-s", "her-f", "braid"}, {});
  const OneForm th = Calculus::uv().theta();
  OneFormMatrix expected = zero_one_forms();
  expected[0][0] = el(1 - q) * th;
  expected[1][1] = el(-(1 - q) * q.inverse()) * th;
  out.push_back({"connection (1-q) diag(1, -q^-1) theta", connection_from_flip(e.flip).forms == expected});
  out.push_back({"curvature zero", curvature(e.flip).forms == zero_two_forms()});
  return out;
}

std::vector<Item> criterion2() {
  const SolutionEntry e = catalog_entry("I");
  const ConditionReport rep = check_all(e.flip, e.metric);
  std::vector<Item> out = pattern(rep, {"SP", "Pg", "compat"}, {});
  out.push_back({"braid residual polynomial in zeta, nonzero, zero at zeta = 0",
                 zeta_polynomial_vanishing_at_zero(rep.at("braid").residual)});
  out.push_back({"her-f residual polynomial in zeta, nonzero, zero at zeta = 0",
                 zeta_polynomial_vanishing_at_zero(rep.at("her-f").residual)});
  return out;
}

std::vector<Item> criterion3() {
  const SolutionEntry e = catalog_entry("II");
  const ConditionReport rep = check_all(e.flip, e.metric);
  std::vector<Item> out = pattern(rep, {"SP", "j-s", "compat", "Pg"}, {"her-f", "braid"});
  const NCElement& l1 = Calculus::uv().lambda(1);
  const ScalarExpr c = -(q * q - 1) * q.pow(-3) * (1 + q + q * q);
  const ScalarExpr z;
  const TwoFormMatrix omega = curvature(e.flip).forms;
  out.push_back({"curvature -(q^2-1) q^-3 (1+q+q^2) [[0,0],[1,0]] l1^2 th1 th2", omega == two_forms({z, z, c, z}, l1 * l1)});
  bool pole = false;
  try {
    curvature_limit_q1(omega);
  } catch (const PoleError&) {
    pole = true;
  }
  out.push_back({"q -> 1 limit reports a pole", pole});
  return out;
}

std::vector<Item> criterion4() {
  const SolutionEntry e = catalog_entry("III");
  const ConditionReport rep = check_all(e.flip, e.metric);
  std::vector<Item> out = pattern(rep, {"SP", "Pg", "compat", "j-s"}, {"her-f", "braid"});
  const Calculus& calc = Calculus::uv();
  const NCElement& l1 = calc.lambda(1);
  const NCElement& l2 = calc.lambda(2);
  const ScalarExpr n = (q * q + 1).inverse();
  const ScalarExpr a = (q - 1).pow(2) * n;
  const ScalarExpr b = (q * q - 1) * n;
  const OneForm th = calc.theta();
  const OneForm mixed{l2, l1};  // l2 th1 + l1 th2
  OneFormMatrix conn = zero_one_forms();
  conn[0][0] = el(a) * th;
  conn[1][1] = el(a) * th;
  conn[0][1] = el(-b) * mixed;
  conn[1][0] = el(b) * mixed;
  out.push_back({"connection matches the displayed form", connection_from_flip(e.flip).forms == conn});

  const ScalarExpr pre = (q * q - 1) * n * n;
  const ScalarExpr d = -pre * q.inverse() * (q * q - 1).pow(2);
  const ScalarExpr s = pre * 2 * (q - 1);
  const ScalarExpr z;
  TwoFormMatrix curv = two_forms({d, z, z, d}, l1 * l2);
  const TwoFormMatrix anti = two_forms({z, -s, s, z}, l1 * l1 + l2 * l2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) curv[i][j] += anti[i][j];
  }
  const TwoFormMatrix omega = curvature(e.flip).forms;
  out.push_back({"curvature matches the displayed form", omega == curv});
  const ScalarExpr u = ScalarExpr::var(Var::u);
  const ScalarExpr v = ScalarExpr::var(Var::v);
  const ScalarExpr w = u.pow(-2) + v.pow(-2);
  out.push_back({"limit [[0,-1],[1,0]] (u^-2 + v^-2)", curvature_limit_q1(omega) == ScalarMatrix(2, 2, {z, -w, w, z})});
  return out;
}

std::vector<Item> criterion5() {
  std::vector<Item> out;
  out.push_back({"P = P_a,q^-1 entrywise", wedge_projector() == antisymmetric_projector(-1)});
  const RhatReport rep = rhat_toolkit();
  out.push_back({"(rrr) first identity, factor q^-1 for R^_q (computed " + rep.rrr_factor_plus.to_string() + ")",
                 rep.rrr_factor_plus == q.inverse()});
  out.push_back({"(rrr) first identity, factor q for R^_q^-1 (computed " + rep.rrr_factor_minus.to_string() + ")",
                 rep.rrr_factor_minus == q});
  const ScalarMatrix r = rhat(1);
  const ScalarMatrix eps = flatten(epsilon_q(1));
  out.push_back({"(rrr) second identity for R^_q and R^_q^-1",
                 (r * eps + q.inverse() * eps).is_zero() && (r.inverse() * eps + q * eps).is_zero()});
  out.push_back({"conformal factor q^-1 for S = q^-1 R^_{q^-1} (computed " + rep.factor_plus.to_string() + ")",
                 rep.factor_plus == q.inverse()});
  out.push_back({"conformal factor q for S = q (R^_{q^-1})^-1 (computed " + rep.factor_minus.to_string() + ")",
                 rep.factor_minus == q});
  for (const char* name : {"RHAT_PLUS", "RHAT_MINUS"}) {
    const SolutionEntry e = catalog_entry(name);
    const std::string tag = std::string(name) + ": ";
    out.push_back({tag + "S g = -g", (e.flip * flatten(e.metric) + flatten(e.metric)).is_zero()});
    out.push_back({tag + "j-s passes", check_flip_reality(e.flip).pass});
    out.push_back({tag + "her-f passes", check_metric_reality(e.flip, e.metric).pass});
    out.push_back({tag + "curvature zero", curvature(e.flip).forms == zero_two_forms()});
  }
  return out;
}

std::vector<Item> criterion6() {
  const SolutionEntry e = catalog_entry("DEGENERATE");
  std::vector<Item> out;
  out.push_back({"braid passes", check_braid(e.flip).pass});
  const ConditionResult tau = check_tau(e.flip, *e.tau);
  out.push_back({"1 + S = (1 - P) T", tau.pass});
  out.push_back({"T not invertible", !is_invertible(*e.tau)});
  out.push_back({"P g = 0", (wedge_projector() * flatten(e.metric)).is_zero()});
  out.push_back({"(1 + S) g = 0", ((ScalarMatrix::identity(4) + e.flip) * flatten(e.metric)).is_zero()});
  const ScalarExpr c = q.inverse() * (q * q - 1);
  const ScalarExpr z;
  const Calculus& calc = Calculus::uv();
  out.push_back({"curvature q^-1 (q^2-1) delta l1 l2 th1 th2",
                 curvature(e.flip).forms == two_forms({c, z, z, c}, calc.lambda(1) * calc.lambda(2))});
  return out;
}

std::vector<Item> criterion7() {
  const Flip s = ScalarMatrix::identity(4) - ScalarExpr(2) * wedge_projector();
  const MetricSolutionSpace space = solve_metric(s);
  return {{"no nondegenerate metric satisfies compat, Pg and her-f", !space.has_nondegenerate_real}};
}

std::vector<Item> criterion8() {
  std::vector<Item> out;
  const ScalarMatrix p = wedge_projector();
  out.push_back({"P^2 = P", p * p == p});
  const ScalarMatrix c = c_matrix();
  out.push_back({"(1 - 2P)^2 = 1", c * c == ScalarMatrix::identity(4)});
  const Calculus& calc = Calculus::uv();
  const OneForm th = calc.theta();
  out.push_back({"d theta = 0", calc.d(th).is_zero()});
  out.push_back({"theta^2 = 0", wedge(th, th).is_zero()});
  std::mt19937 rng(2024);
  bool d2 = true;
  for (int k = 0; k < 50; ++k) d2 = d2 && calc.d(calc.d(qplane::testing::random_element(rng))).is_zero();
  out.push_back({"d^2 = 0 on 50 random elements", d2});
  bool wz = true;
  for (int e1 : {1, -1}) {
    for (int e2 : {1, -1}) {
      const auto rel = check_wz_relations(e1, e2);
      wz = wz && rel.size() == 8 && all_pass(rel);
    }
  }
  out.push_back({"eight coordinate-differential relations (x,y and u,v)", wz});
  bool pll = true;
  for (std::size_t col = 0; col < 4; ++col) {
    NCElement s(Presentation::uv());
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) s += (calc.lambda(i) * calc.lambda(j)).scaled(p(2 * (i - 1) + (j - 1), col));
    }
    pll = pll && s.is_zero();
  }
  out.push_back({"P lambda lambda = 0", pll});
  bool cs = true;
  for (int i = 1; i <= 2; ++i) {
    cs = cs && calc.structure_element(i, 1, 2) == expected_structure_element(i) &&
         calc.structure_element(i, 2, 1) == expected_structure_element(i).scaled(-q);
  }
  out.push_back({"structure elements C^i_jk", cs});
  out.push_back({"volume th1 th2 = du dv (computed du dv = " + volume_form().g.to_string() + " th1 th2)",
                 volume_form() == TwoForm{el(ScalarExpr(1))}});
  const auto xy = check_xy_relations(-1);
  out.push_back({"(x-y) X^t Q sigma2 X = 0", xy[0].pass});
  out.push_back({"(x-y) X Xi^t = Xi (Q^2 X)^t as printed", xy[1].pass});
  out.push_back({"(x-y) Xi^t Q Xi = 0", xy[3].pass});
  return out;
}

std::vector<Item> criterion9() {
  const Calculus& calc = Calculus::uv();
  std::vector<Item> out;
  out.push_back({"lambda_i anti-hermitian",
                 calc.star(calc.lambda(1)) == -calc.lambda(1) && calc.star(calc.lambda(2)) == -calc.lambda(2)});
  std::mt19937 rng(99);
  bool df = true;
  for (int k = 0; k < 20; ++k) {
    const NCElement f = qplane::testing::random_element(rng);
    df = df && calc.star(calc.d(f)) == calc.d(calc.star(f));
  }
  out.push_back({"(df)* = d(f*) on 20 random elements", df});
  bool forms = true;
  for (int k = 0; k < 20; ++k) {
    const OneForm a = calc.d(qplane::testing::random_element(rng)) * qplane::testing::random_element(rng);
    forms = forms && calc.star(calc.star(a)) == a;
  }
  out.push_back({"star is an involution on random one-forms", forms});
  bool round_trip = true;
  for (const auto& name : catalog_names()) {
    const SolutionEntry e = catalog_entry(name);
    round_trip = round_trip && e.flip.star().star() == e.flip && e.metric.star().star() == e.metric;
  }
  out.push_back({"catalog flips and metrics round-trip through star", round_trip});
  return out;
}

std::vector<Item> criterion10() {
  std::vector<Item> out;
  const auto comm = check_primed_commutator();
  out.push_back({"[l1', l2'] = l1' + (1-q) l1' l2'", comm[2].pass});
  const LobachevskyReport rep = check_lobachevsky_limit();
  for (const auto& c : rep.checks) {
    out.push_back({c.name + (c.pass ? "" : " [" + c.residual + "]"), c.pass});
  }
  return out;
}

std::vector<Item> criterion11() {
  double worst = 0.0;
  for (double alpha : {0.13, 0.41, 0.77, 1.21, 2.6}) {
    for (double beta : {0.09, 0.33, 0.71, 1.45, 2.9}) {
      const RepParams p = RepParams::make(alpha, beta);
      for (cdouble k : {cdouble{0.3, 0.0}, cdouble{1.1, 0.4}, cdouble{2.2, -0.9}, cdouble{0.6, 2.5}, cdouble{5.0, 0.1}}) {
        worst = std::max(worst, commutation_residual(p, Ket::basis(k)));
      }
    }
  }
  std::vector<Item> out;
  std::ostringstream w;
  w << std::scientific << std::setprecision(1) << worst;
  out.push_back({"u v = q v u on a 5x5x5 grid (worst " + w.str() + ")", worst < kNumericTol});
  const NumericMatrix id{{{1.0, 0.0}, {0.0, 1.0}}};
  bool euclid = true;
  for (double a : {0.5, -1.25, 3.0}) {
    for (double b : {2.0, -0.75}) euclid = euclid && std::abs(distance(id, {a, b}) - (a * a + b * b)) < kNumericTol;
  }
  out.push_back({"identity metric gives a^2 + b^2", euclid});
  const NumericMatrix g = evaluate_metric(catalog_entry("I", ScalarExpr(0)).metric, UnitEval::from_eta(0.0));
  const bool cone = std::abs(distance(g, {1.0, 0.0})) < kNumericTol && std::abs(distance(g, {0.0, 1.0})) < kNumericTol &&
                    std::abs(distance(g, {1.0, 1.0}) - 2.0) < kNumericTol &&
                    std::abs(distance(g, {1.0, -1.0}) + 2.0) < kNumericTol;
  out.push_back({"Solution I at q = 1: null frame directions, 2 du dv", cone});
  return out;
}

std::vector<Item> criterion12() {
  std::vector<Item> out;
  std::vector<std::pair<std::string, Flip>> flips;
  for (const auto& name : catalog_names()) flips.emplace_back(name, catalog_entry(name).flip);
  flips.emplace_back("I (zeta = 0)", catalog_entry("I", ScalarExpr(0)).flip);
  for (const auto& [name, s] : flips) {
    const MetricSolutionSpace space = solve_metric(s);
    bool ok = true;
    for (const auto& g : space.basis) ok = ok && check_compat(s, g).pass && check_symmetry(g).pass;
    out.push_back({name + ": " + std::to_string(space.dimension) + " basis vectors pass compat and Pg", ok});
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Solution I (zeta = 0): conditions, connection, flat", criterion1, 1.0},
      {2, "Solution I (formal zeta): braid and her-f only at zeta = 0", criterion2},
      {3, "Solution II: conditions, curvature, divergent limit", criterion3},
      {4, "Solution III: conditions, connection, curvature, limit", criterion4},
      {5, "R-hat solutions", criterion5},
      {6, "Degenerate solution", criterion6},
      {7, "tau = 2 no-go", criterion7},
      {8, "Calculus suite", criterion8, 5.0},
      {9, "Reality suite", criterion9},
      {10, "Jordanian limit", criterion10},
      {11, "Representation and distance (numeric)", criterion11},
      {12, "Solver round trip", criterion12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Item> items;
    std::string error;
    try {
      items = c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = error.empty() && !items.empty();
    for (const auto& it : items) pass = pass && it.pass;
    const bool in_time = c.time_limit_s == 0.0 || seconds < c.time_limit_s;
    pass = pass && in_time;
    failed += pass ? 0 : 1;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << c.id << "  " << c.title << "  (" << std::fixed
              << std::setprecision(2) << seconds << " s)\n";
    for (const auto& it : items) {
      if (!it.pass) std::cout << "         failing: " << it.what << "\n";
    }
    if (!in_time) std::cout << "         failing: runtime limit " << c.time_limit_s << " s\n";
    if (!error.empty()) std::cout << "         error: " << error << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
