#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qplane/scalars.hpp"
#include "random_scalars.hpp"

using namespace qplane;
using qplane::testing::random_nonzero_scalar;
using qplane::testing::random_scalar;

namespace {

Poly r_poly(int k) { return Poly::variable(Var::r, k); }

}  // namespace

TEST_CASE("gcd of multivariate polynomials") {
  const Poly r = r_poly(1);
  const Poly h = Poly::variable(Var::h);
  const Poly one(1);
  CHECK(gcd((r - one) * (r + h), (r - one) * (r - h)) == r - one);
  CHECK(gcd(r * r * h, r * h * h) == r * h);
  CHECK(gcd(r + one, r - one) == one);
  // common bivariate factor that is not a product of univariate ones
  const Poly f = r * h + one;
  CHECK(gcd(f * (r + h), f * (r - one) * (r - one)) == f);
  CHECK(gcd(Poly(GaussRational(0, 2)) * (r - GaussRational(0, 1)), r * r + one) == r - GaussRational(0, 1));
}

TEST_CASE("arith: algebraic identities and reduction") {
  const ScalarExpr q = ScalarExpr::q();
  CHECK((1 - q.inverse()) * q / (q - 1) == ScalarExpr(1));

  // 1/(1 - q^-1) = q/(q-1) = 1/(1 - r^4) = -1/(r^4 - 1)
  const ScalarExpr lhs = ScalarExpr(1) / (1 - q.inverse());
  CHECK(lhs == q / (q - 1));
  CHECK(lhs.numerator() == Poly(-1));
  CHECK(lhs.denominator() == r_poly(4) - Poly(1));

  CHECK_THROWS_AS(ScalarExpr::zeta() / ScalarExpr(), DivisionByZero);
  CHECK_THROWS_AS(ScalarExpr().inverse(), DivisionByZero);
}

TEST_CASE("star: involution on the coefficient field") {
  CHECK(ScalarExpr::q_half().star() == ScalarExpr::q_half(-1));
  const ScalarExpr q = ScalarExpr::q();
  const ScalarExpr a = ScalarExpr::zeta() / (q - 1);
  // zeta/(q^-1 - 1) = zeta/(r^4 - 1)
  CHECK(a.star() == ScalarExpr::zeta() / (q.inverse() - 1));
  CHECK(a.star() == ScalarExpr(Poly::variable(Var::z), r_poly(4) - Poly(1)));

  const ScalarExpr f = (1 + ScalarExpr::i() * ScalarExpr::var(Var::r)) /
                       (ScalarExpr::var(Var::r, 3) - ScalarExpr::h());
  CHECK(f.star().star() == f);
  CHECK(ScalarExpr::i().star() == -ScalarExpr::i());
  CHECK(ScalarExpr::h().star() == ScalarExpr::h());
  // r alone is not fixed; r + 1/r is
  const ScalarExpr r = ScalarExpr::var(Var::r);
  CHECK_FALSE(r.star() == r);
  CHECK((r + r.inverse()).star() == r + r.inverse());
  CHECK((ScalarExpr::q_half() + ScalarExpr::q_half(-1)).star() == ScalarExpr::q_half() + ScalarExpr::q_half(-1));
}

TEST_CASE("parse and print") {
  CHECK(parse_scalar("q^(1/2)") == ScalarExpr::var(Var::r, -2));
  CHECK(parse_scalar("q^(-1/2)") == ScalarExpr::var(Var::r, 2));
  CHECK(parse_scalar(" q ") == ScalarExpr::var(Var::r, -4));

  const ScalarExpr a = parse_scalar("(1-q^2)/(1+q^2)");
  const ScalarExpr q = ScalarExpr::q();
  CHECK(a == (1 - q * q) / (1 + q * q));
  CHECK(parse_scalar(a.to_string()) == a);

  const ScalarExpr s14 = parse_scalar("zeta^2*(q^2+1)/(q*(q^2-1))");
  const ScalarExpr z = ScalarExpr::zeta();
  CHECK(s14 == q.inverse() * (q * q - 1).inverse() * z * z * (q * q + 1));
  CHECK(parse_scalar(s14.to_string()) == s14);

  CHECK(parse_scalar("-3/4*i + h^2 - r^-3") ==
        ScalarExpr::fraction(-3, 4) * ScalarExpr::i() + ScalarExpr::h().pow(2) - ScalarExpr::var(Var::r, -3));
  CHECK(parse_scalar("2^(-1)") == ScalarExpr::fraction(1, 2));

  CHECK_THROWS_AS(parse_scalar("q + x"), ParseError);
  CHECK_THROWS_AS(parse_scalar("(q"), ParseError);
  CHECK_THROWS_AS(parse_scalar("r^(1/2)"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  try {
    parse_scalar("1 + foo");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("eval at unit-modulus points") {
  using std::numbers::pi;
  const auto at = UnitEval::from_angle(pi / 7);
  const auto value = eval(ScalarExpr::q(), at);
  CHECK(std::abs(value - std::polar(1.0, -4 * pi / 7)) < 1e-14);

  const ScalarExpr c = (ScalarExpr::q_half() + ScalarExpr::q_half(-1)) / 2;
  for (double eta : {0.1, 0.23, 0.37}) {
    CHECK(std::abs(eval(c, UnitEval::from_eta(eta)) - std::cos(pi * eta)) < 1e-14);
  }
  CHECK_THROWS_AS(eval(ScalarExpr(1) / (ScalarExpr::q() - 1), UnitEval::from_eta(0.0)), PoleError);
  CHECK_THROWS(UnitEval::deformed(1.0));
  CHECK_NOTHROW(UnitEval::deformed(0.3));

  // |eval(star a)| = |conj(eval a)| for real h, zeta
  std::mt19937 rng(7);
  UnitEval p = UnitEval::from_angle(0.61);
  p.h = 0.3;
  p.z = -1.7;
  for (int k = 0; k < 20; ++k) {
    const ScalarExpr s = random_scalar(rng);
    std::complex<double> v, w;
    try {
      v = eval(s, p);
      w = eval(s.star(), p);
    } catch (const PoleError&) {
      continue;
    }
    CHECK(std::abs(w - std::conj(v)) < 1e-9 * (1 + std::abs(v)));
  }
}

TEST_CASE("field laws and canonicality on random triples") {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 60; ++trial) {
    const ScalarExpr a = random_scalar(rng);
    const ScalarExpr b = random_scalar(rng);
    const ScalarExpr c = random_nonzero_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(c * c.inverse() == ScalarExpr(1));
    CHECK((a - a).is_zero());
    // same value by two routes gives the same representation
    CHECK((a * c + b * c) / c == a + b);
    CHECK((a + b).pow(2) == a * a + 2 * a * b + b * b);
    // star is a field automorphism of order two
    CHECK(a.star().star() == a);
    CHECK((a * b).star() == a.star() * b.star());
    CHECK((a + b).star() == a.star() + b.star());
    CHECK(a.invert_q().invert_q() == a);
    CHECK(parse_scalar(a.to_string()) == a);
  }
}

TEST_CASE("substitution, derivative and limits") {
  const ScalarExpr z = ScalarExpr::zeta();
  const ScalarExpr r = ScalarExpr::var(Var::r);
  const ScalarExpr f = (z * z + r) / (r - 2);
  CHECK(f.substitute(Var::z, ScalarExpr(0)) == r / (r - 2));
  CHECK(f.substitute(Var::r, ScalarExpr(1)) == -(z * z + 1));
  CHECK(f.derivative(Var::z) == 2 * z / (r - 2));
  CHECK(r.pow(-3).derivative(Var::r) == -3 * r.pow(-4));

  const ScalarExpr h0 = ScalarExpr::var(Var::h0);
  const ScalarExpr u = ScalarExpr::var(Var::up);
  CHECK((h0 * h0 / ((u + h0) * (u + h0))).limit_at_infinity(Var::h0).value() == ScalarExpr(1));
  CHECK((h0 / ((u + h0) * (u + h0))).limit_at_infinity(Var::h0).value().is_zero());
  CHECK_FALSE((h0 * h0 / (u + h0)).limit_at_infinity(Var::h0).has_value());
}
