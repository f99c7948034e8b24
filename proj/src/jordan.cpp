#include "qplane/jordan.hpp"

namespace qplane {

namespace {

NCElement scalar(const ScalarExpr& c) { return NCElement(Presentation::uv(), c); }

CheckResult element_check(std::string name, const NCElement& residual) {
  return {std::move(name), residual.is_zero(), residual.to_string()};
}

CheckResult scalar_check(std::string name, const ScalarExpr& residual) {
  return {std::move(name), residual.is_zero(), residual.to_string()};
}

bool has_pole_at_one(const ScalarExpr& c) {
  try {
    c.substitute(Var::r, ScalarExpr(1));
    return false;
  } catch (const DivisionByZero&) {
    return true;
  }
}

ScalarExpr at_one(const ScalarExpr& c) { return c.substitute(Var::r, ScalarExpr(1)); }

/// h0 -> infinity, then q~ -> 1; empty if the h0 limit diverges.
std::optional<QuadraticForm> leading(const QuadraticForm& f) {
  QuadraticForm out;
  for (auto [src, dst] : {std::pair{&f.a, &out.a}, std::pair{&f.b, &out.b}, std::pair{&f.c, &out.c}}) {
    const auto lim = src->limit_at_infinity(Var::h0);
    if (!lim) return std::nullopt;
    *dst = at_one(*lim);
  }
  return out;
}

}  // namespace

JordanMap JordanMap::make() {
  const ScalarExpr q = ScalarExpr::q();
  const ScalarExpr h = ScalarExpr::h();
  JordanMap m;
  m.h0 = 2 * h / (1 - q);
  const Calculus& calc = Calculus::uv();
  m.lambda1p = calc.lambda(1).scaled(m.h0.inverse());
  m.lambda2p = calc.lambda(2).scaled(m.h0.inverse()) - scalar(ScalarExpr::fraction(1, 2) * h.inverse() * m.h0);
  return m;
}

std::vector<CheckResult> check_primed_commutator() {
  const ScalarExpr q = ScalarExpr::q();
  const JordanMap m = JordanMap::make();
  const Calculus& calc = Calculus::uv();
  const NCElement& l1 = calc.lambda(1);
  const NCElement& l2 = calc.lambda(2);
  std::vector<CheckResult> out;
  out.push_back(element_check("[l1, l2] = (1-q) l1 l2", commutator(l1, l2) - (l1 * l2).scaled(1 - q)));
  out.push_back(element_check("[l1', l2'] = h0^-2 [l1, l2]",
                              commutator(m.lambda1p, m.lambda2p) - commutator(l1, l2).scaled(m.h0.pow(-2))));
  const NCElement residual =
      commutator(m.lambda1p, m.lambda2p) - m.lambda1p - (m.lambda1p * m.lambda2p).scaled(1 - q);
  out.push_back(element_check("[l1', l2'] = l1' + (1-q) l1' l2'", residual));
  bool h_free = true;
  for (const auto& [k, c] : residual.terms()) h_free = h_free && !c.depends_on(Var::h);
  out.push_back({"residual independent of h", residual.is_zero() && h_free, residual.to_string()});
  return out;
}

GeneratorReport check_primed_generators() {
  const ScalarExpr q = ScalarExpr::q();
  const ScalarExpr h = ScalarExpr::h();
  const JordanMap m = JordanMap::make();
  const NCElement up = NCElement::u(-1).scaled(q) - scalar(m.h0);
  const NCElement vp = NCElement::v(-1).scaled(-q);

  GeneratorReport out;
  out.commutator = commutator(up, vp);
  out.checks.push_back({"u'v' - v'u' nonzero for generic q", !out.commutator.is_zero(), out.commutator.to_string()});

  // u'v' = -q^2 u^-1 v^-1 + q h0 v^-1, v' = -q v^-1
  const NCElement residual = out.commutator + vp.scaled(2 * h);
  out.alpha = residual.coefficient(-1, -1) / (-q * q);
  out.beta = (residual.coefficient(0, -1) - out.alpha * q * m.h0) / (-q);
  out.checks.push_back(
      element_check("[u', v'] + 2h v' = alpha u'v' + beta v'", residual - (up * vp).scaled(out.alpha) - vp.scaled(out.beta)));
  out.checks.push_back(scalar_check("alpha = -q^-1 (1 - q)", out.alpha + q.inverse() * (1 - q)));
  out.checks.push_back(scalar_check("beta = 2h (1 - q^-1)", out.beta - 2 * h * (1 - q.inverse())));
  const bool finite = !has_pole_at_one(out.alpha) && !has_pole_at_one(out.beta);
  out.checks.push_back({"alpha, beta -> 0 at q~ = 1 ([u', v'] -> -2h v')",
                        finite && at_one(out.alpha).is_zero() && at_one(out.beta).is_zero(),
                        finite ? "(" + at_one(out.alpha).to_string() + ", " + at_one(out.beta).to_string() + ")"
                               : "pole"});
  out.checks.push_back({"h0 has a pole at q~ = 1", has_pole_at_one(m.h0), m.h0.to_string()});
  return out;
}

QuadraticForm primed_line_element(const ScalarExpr& g1, const ScalarExpr& g2, const ScalarExpr& g4,
                                  const ScalarExpr& a, const ScalarExpr& b) {
  const ScalarExpr up = ScalarExpr::var(Var::up);
  const ScalarExpr vp = ScalarExpr::var(Var::vp);
  const ScalarExpr h0 = ScalarExpr::var(Var::h0);
  const ScalarExpr u = a / (up + h0);
  const ScalarExpr v = b / vp;
  const ScalarExpr du = u.derivative(Var::up);
  const ScalarExpr dv = v.derivative(Var::vp);
  return {g1 * (v / u).pow(2) * du * du, 2 * g2 * du * dv, g4 * (u / v).pow(2) * dv * dv};
}

LobachevskyReport check_lobachevsky_limit() {
  const ScalarExpr q = ScalarExpr::q();
  const ScalarExpr up = ScalarExpr::var(Var::up);
  const ScalarExpr vp = ScalarExpr::var(Var::vp);
  const ScalarExpr h0 = ScalarExpr::var(Var::h0);
  const ScalarExpr zero;
  const ScalarExpr one(1);
  const ScalarExpr pre = (up + h0).pow(-2) * vp.pow(-2);

  LobachevskyReport out;
  const std::array<QuadraticForm, 3> displayed{QuadraticForm{pre * q * q, zero, zero},
                                               QuadraticForm{zero, -2 * pre, zero},
                                               QuadraticForm{zero, zero, pre * q.pow(-2)}};
  const std::array<std::array<ScalarExpr, 3>, 3> units{{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}};
  bool literal = true;
  bool alternative = true;
  bool at_q1 = true;
  std::string detail;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& [g1, g2, g4] = units[k];
    out.primed[k] = primed_line_element(g1, g2, g4, q, -q);
    out.primed_alternative[k] = primed_line_element(g1, g2, g4, q.inverse(), -q);
    literal = literal && out.primed[k] == displayed[k];
    alternative = alternative && out.primed_alternative[k] == displayed[k];
    const QuadraticForm& c = out.primed[k];
    const QuadraticForm& d = displayed[k];
    at_q1 = at_q1 && at_one(c.a) == at_one(d.a) && at_one(c.b) == at_one(d.b) && at_one(c.c) == at_one(d.c);
    const ScalarExpr& computed = k == 0 ? c.a : k == 1 ? c.b : c.c;
    detail += (k == 0 ? "" : ", ") + (computed / pre).to_string();
  }
  out.checks.push_back({"(a) (ds) in primed variables matches the displayed form", literal,
                        "computed coefficients of g1, g2, g4 over (u'+h0)^-2 v'^-2: " + detail});
  out.checks.push_back({"(a) agreement at q~ = 1", at_q1, ""});
  out.checks.push_back({"(a) displayed form from u' = q^-1 u^-1 - h0", alternative, ""});

  const ScalarExpr h0sq = h0 * h0;
  const QuadraticForm lob = primed_line_element(h0sq, zero, h0sq, q, -q);
  const auto lob_lead = leading(lob);
  out.lobachevsky = lob_lead.value_or(QuadraticForm{});
  const QuadraticForm expected_lob{vp.pow(-2), zero, vp.pow(-2)};
  out.checks.push_back({"(b) leading term v'^-2 (du'^2 + dv'^2)", lob_lead && *lob_lead == expected_lob,
                        lob_lead ? lob_lead->a.to_string() + ", " + lob_lead->b.to_string() + ", " + lob_lead->c.to_string()
                                 : "diverges"});

  const QuadraticForm nul = primed_line_element(zero, h0sq, zero, q, -q);
  const auto nul_lead = leading(nul);
  out.null_metric = nul_lead.value_or(QuadraticForm{});
  const QuadraticForm expected_nul{zero, -2 * vp.pow(-2), zero};
  out.checks.push_back({"(c) leading term -2 v'^-2 du'dv'", nul_lead && *nul_lead == expected_nul,
                        nul_lead ? nul_lead->b.to_string() : "diverges"});
  // dv = q v'^-2 dv', so v'^-2 dv' = dv at q~ = 1
  const ScalarExpr dv_dvp = (-q / vp).derivative(Var::vp);
  out.checks.push_back(scalar_check("(c) -2 v'^-2 du'dv' = -2 du'dv at q~ = 1", at_one(dv_dvp) - vp.pow(-2)));
  // the leading terms do not depend on the order of the two limits
  const QuadraticForm lob_q1{at_one(lob.a), at_one(lob.b), at_one(lob.c)};
  const auto swapped = leading(lob_q1);
  out.checks.push_back({"(b) limits commute", swapped && *swapped == out.lobachevsky, ""});
  return out;
}

}  // namespace qplane
