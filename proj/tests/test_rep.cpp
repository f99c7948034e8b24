#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qplane/catalog.hpp"
#include "qplane/rep.hpp"

using namespace qplane;
using std::numbers::pi;

TEST_CASE("parameters") {
  const RepParams p = RepParams::make(0.3, 0.7);
  CHECK(std::abs(std::abs(p.q()) - 1.0) < 1e-15);
  CHECK(std::abs(p.q() - std::polar(1.0, 2 * pi * 0.21)) < 1e-15);
  CHECK_THROWS_AS(RepParams::make(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(RepParams::make(1.0, -2.0), std::invalid_argument);
  // alpha beta = 1/4 gives q = i
  CHECK_THROWS_AS(RepParams::make(0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(Ket::basis({-1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("action on basis kets") {
  const RepParams p = RepParams::make(0.4, 0.9);
  const cdouble k{1.5, 0.3};
  const Ket vk = apply_v(p, Ket::basis(k));
  REQUIRE(vk.terms().size() == 1);
  CHECK(std::abs(vk.terms()[0].k - (k + 2 * pi * 0.4)) < 1e-15);
  CHECK(vk.terms()[0].amplitude == 1.0);

  // (u f)(x) = f(x - i beta) for f = e^{-kx}, evaluated pointwise
  const Ket uk = apply_u(p, Ket::basis(k));
  const cdouble x{0.37, 0.0};
  const cdouble shifted = std::exp(-k * (x - cdouble{0.0, p.beta}));
  CHECK(std::abs(uk.terms()[0].amplitude * std::exp(-k * x) - shifted) < 1e-14);
  CHECK(uk.terms()[0].k == k);

  const Ket uu = apply_u(p, apply_u(p, Ket::basis(k)));
  const Ket u2 = apply_u_power(p, Ket::basis(k), 2);
  CHECK(std::abs(uu.terms()[0].amplitude - u2.terms()[0].amplitude) < 1e-14);
  const Ket back = apply_u_power(p, uk, -1);
  CHECK(std::abs(back.amplitude(k) - 1.0) < 1e-14);
}

TEST_CASE("u v = q v u on a grid and on superpositions") {
  double worst = 0.0;
  for (double alpha : {0.11, 0.37, 0.62, 1.3, 2.05}) {
    for (double beta : {0.07, 0.29, 0.83, 1.7, 3.1}) {
      const RepParams p = RepParams::make(alpha, beta);
      for (cdouble k : {cdouble{0.2, 0.0}, cdouble{1.0, 0.5}, cdouble{2.7, -1.1}, cdouble{0.05, 3.0}, cdouble{7.5, 0.0}}) {
        worst = std::max(worst, commutation_residual(p, Ket::basis(k)));
        const Ket uv = apply_u(p, apply_v(p, Ket::basis(k)));
        CHECK(uv.terms()[0].k.real() > k.real());
      }
    }
  }
  CHECK(worst < 1e-12);

  const RepParams p = RepParams::make(0.25, 0.6);
  Ket s;
  s.add({1.0, 0.0}, {2.0, -1.0});
  s.add({3.0, 0.4}, {0.5, 0.0});
  s.add({1.0, 0.0}, {1.0, 1.0});
  CHECK(s.terms().size() == 2);
  CHECK(commutation_residual(p, s) < 1e-12);

  // the opposite shift gives u v = q^-1 v u
  const Ket uv = apply_u_power(p, apply_v(p, Ket::basis(1.0)), -1);
  const Ket vu = apply_v(p, apply_u_power(p, Ket::basis(1.0), -1));
  const cdouble k2 = 1.0 + 2 * pi * p.alpha;
  CHECK(std::abs(uv.amplitude(k2) - std::conj(p.q()) * vu.amplitude(k2)) < 1e-12);
  CHECK(std::abs(uv.amplitude(k2) - p.q() * vu.amplitude(k2)) > 1e-3);
}

TEST_CASE("distance") {
  const NumericMatrix id{{{1.0, 0.0}, {0.0, 1.0}}};
  for (double a : {-1.5, 0.0, 2.0}) {
    for (double b : {0.3, -4.0}) CHECK(std::abs(distance(id, {a, b}) - (a * a + b * b)) < 1e-12);
  }
  const Metric g = catalog_entry("I", ScalarExpr(0)).metric;
  const NumericMatrix at_one = evaluate_metric(g, UnitEval::from_eta(0.0));
  CHECK(std::abs(distance(at_one, {1.0, 1.0}) - 2.0) < 1e-12);
  CHECK(std::abs(distance(at_one, {1.0, -1.0}) + 2.0) < 1e-12);
  CHECK(std::abs(distance(at_one, {1.0, 0.0})) < 1e-12);
  for (double eta : {0.1, 0.3}) {
    const NumericMatrix m = evaluate_metric(g, UnitEval::from_eta(eta));
    CHECK(std::abs(distance(m, {1.0, 0.0})) < 1e-12);
    // only the symmetric part g_S = cos(pi eta) contributes
    CHECK(std::abs(distance(m, {1.0, 1.0}) - 2 * std::cos(pi * eta)) < 1e-12);
  }
}
