#pragma once

#include <vector>

#include "qplane/check_result.hpp"
#include "qplane/geometry.hpp"
#include "qplane/ncpoly.hpp"

namespace qplane {

/// h0 = 2h/(1 - q), lambda'_1 = h0^-1 lambda_1, lambda'_2 = h0^-1 lambda_2 - h^-1 h0 / 2.
struct JordanMap {
  ScalarExpr h0;
  NCElement lambda1p;
  NCElement lambda2p;

  static JordanMap make();
};

/// [lambda'_1, lambda'_2] = lambda'_1 + (1 - q) lambda'_1 lambda'_2 and the
/// intermediate steps.
std::vector<CheckResult> check_primed_commutator();

struct GeneratorReport {
  std::vector<CheckResult> checks;
  /// u'v' - v'u' in the u, v algebra.
  NCElement commutator;
  /// [u', v'] + 2h v' = alpha u'v' + beta v'
  ScalarExpr alpha;
  ScalarExpr beta;
};

/// u' = q u^-1 - h0, v' = -q v^-1.
GeneratorReport check_primed_generators();

struct LobachevskyReport {
  std::vector<CheckResult> checks;
  /// (ds) in du'^2, du'dv', dv'^2 for g = (g1, g2, g4) = unit vectors, i.e.
  /// the coefficient multiplying each g.
  std::array<QuadraticForm, 3> primed;
  /// The same with u' = q^-1 u^-1 - h0.
  std::array<QuadraticForm, 3> primed_alternative;
  /// h0 -> infinity then q~ -> 1, for g2 = 0, g1 = g4 = h0^2.
  QuadraticForm lobachevsky;
  /// h0 -> infinity then q~ -> 1, for g1 = g4 = 0, g2 = h0^2.
  QuadraticForm null_metric;
};

/// Commutative-limit comparisons over u', v' (Var::up, Var::vp) and h0
/// (Var::h0) as independent variables.
LobachevskyReport check_lobachevsky_limit();

/// (ds) = g1 v^2 u^-2 du^2 + 2 g2 du dv + g4 u^2 v^-2 dv^2 rewritten for
/// u = a (u' + h0)^-1, v = b v'^-1.
QuadraticForm primed_line_element(const ScalarExpr& g1, const ScalarExpr& g2, const ScalarExpr& g4,
                                  const ScalarExpr& a, const ScalarExpr& b);

}  // namespace qplane
