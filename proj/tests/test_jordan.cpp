#include "doctest.h"
#include "qplane/jordan.hpp"

using namespace qplane;

namespace {

void check_all(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.residual);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("primed lambdas") {
  check_all(check_primed_commutator());
  const JordanMap m = JordanMap::make();
  const ScalarExpr q = ScalarExpr::q();
  CHECK(m.h0 * (1 - q) == 2 * ScalarExpr::h());
  // lambda'_2 differs from h0^-1 lambda_2 by a central constant
  const NCElement shift = m.lambda2p - Calculus::uv().lambda(2).scaled(m.h0.inverse());
  CHECK(shift.is_monomial());
  CHECK(shift.coefficient(0, 0) == -ScalarExpr::fraction(1, 2) * ScalarExpr::h().inverse() * m.h0);
  // the lambdas commute with central shifts, so the commutator ignores it
  CHECK(commutator(m.lambda1p, shift).is_zero());
}

TEST_CASE("primed generators") {
  const GeneratorReport rep = check_primed_generators();
  check_all(rep.checks);
  const ScalarExpr q = ScalarExpr::q();
  // [q u^-1, -q v^-1] = -q^2 (1 - q^-1) u^-1 v^-1 from u^-1 v^-1 = q v^-1 u^-1
  CHECK(rep.commutator == NCElement::u(-1) * NCElement::v(-1) * NCElement(Presentation::uv(), -q * q * (1 - q.inverse())));
  CHECK(rep.alpha == 1 - q.inverse());
}

TEST_CASE("primed line element against the hand substitution") {
  const ScalarExpr up = ScalarExpr::var(Var::up);
  const ScalarExpr vp = ScalarExpr::var(Var::vp);
  const ScalarExpr h0 = ScalarExpr::var(Var::h0);
  const ScalarExpr pre = (up + h0).pow(-2) * vp.pow(-2);
  // u = a (u'+h0)^-1, v = b v'^-1 gives pre (b^2 g1 du'^2 + 2 a b g2 du'dv' + a^2 g4 dv'^2)
  const ScalarExpr a = 3 * ScalarExpr::q();
  const ScalarExpr b = ScalarExpr::zeta() - 1;
  const ScalarExpr g1 = ScalarExpr::h();
  const ScalarExpr g2 = ScalarExpr(5);
  const ScalarExpr g4 = h0;
  const QuadraticForm f = primed_line_element(g1, g2, g4, a, b);
  CHECK(f.a == pre * b * b * g1);
  CHECK(f.b == pre * 2 * a * b * g2);
  CHECK(f.c == pre * a * a * g4);
}

TEST_CASE("Lobachevsky limits") {
  const LobachevskyReport rep = check_lobachevsky_limit();
  const ScalarExpr q = ScalarExpr::q();
  const ScalarExpr vp = ScalarExpr::var(Var::vp);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CAPTURE(c.residual);
    // with u' = q u^-1 - h0 every coefficient carries q^2; the displayed
    // q^2, 1, q^-2 pattern belongs to u' = q^-1 u^-1 - h0
    CHECK(c.pass == (c.name != "(a) (ds) in primed variables matches the displayed form"));
  }
  const ScalarExpr pre = (ScalarExpr::var(Var::up) + ScalarExpr::var(Var::h0)).pow(-2) * vp.pow(-2);
  CHECK(rep.primed[0].a == q * q * pre);
  CHECK(rep.primed[1].b == -2 * q * q * pre);
  CHECK(rep.primed[2].c == q * q * pre);
  CHECK(rep.primed_alternative[2].c == q.pow(-2) * pre);
  CHECK(rep.lobachevsky == QuadraticForm{vp.pow(-2), ScalarExpr(), vp.pow(-2)});
  CHECK(rep.null_metric == QuadraticForm{ScalarExpr(), -2 * vp.pow(-2), ScalarExpr()});
}
