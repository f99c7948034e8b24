#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "qplane/check_result.hpp"
#include "qplane/conditions.hpp"
#include "qplane/forms.hpp"

namespace qplane {

/// 2x2 matrices of forms, indexed [i-1][j-1].
using OneFormMatrix = std::array<std::array<OneForm, 2>, 2>;
using TwoFormMatrix = std::array<std::array<TwoForm, 2>, 2>;

OneFormMatrix zero_one_forms(const Presentation& p = Presentation::uv());
TwoFormMatrix zero_two_forms(const Presentation& p = Presentation::uv());
bool operator==(const OneFormMatrix& a, const OneFormMatrix& b);
bool operator==(const TwoFormMatrix& a, const TwoFormMatrix& b);
std::string to_string(const OneFormMatrix& m);
std::string to_string(const TwoFormMatrix& m);

struct Connection {
  /// omega^i_jk = lambda_l (S^il_jk - delta^l_j delta^i_k), indexed [i-1][j-1][k-1].
  std::array<std::array<std::array<NCElement, 2>, 2>, 2> coefficients;
  /// omega^i_k = omega^i_jk th^j
  OneFormMatrix forms;
};

Connection connection_from_flip(const Flip& s, const Calculus& calc = Calculus::uv());
/// lambda_l S^il_jk th^j + delta^i_k theta, assembled independently of the
/// coefficient formula.
OneFormMatrix connection_one_form(const Flip& s, const Calculus& calc = Calculus::uv());

struct Curvature {
  /// 1/2 R^i_jkl, indexed [i-1][j-1][k-1][l-1].
  std::array<std::array<std::array<std::array<NCElement, 2>, 2>, 2>, 2> half_r;
  /// Omega^i_j = 1/2 R^i_jkl th^k th^l
  TwoFormMatrix forms;
};

/// 1/2 R^i_jkl = S^im_rn S^np_sj P^rs_kl lambda_m lambda_p
Curvature curvature(const Flip& s, const Calculus& calc = Calculus::uv());
/// 1/2 R^i_jkl = -S^im_rn S^np_sj S^rs_uv P^uv_kl lambda_m lambda_p
Curvature curvature_alternative(const Flip& s, const Calculus& calc = Calculus::uv());
/// d omega + omega omega for a connection 1-form matrix.
TwoFormMatrix curvature_from_forms(const OneFormMatrix& omega, const Calculus& calc = Calculus::uv());

/// Coefficient-wise q~ -> 1 of an element of the u,v algebra, as a function
/// of commuting u, v. Throws PoleError naming the offending coefficient.
ScalarExpr commutative_limit(const NCElement& f);
/// th1 th2 coefficients of a curvature matrix at q~ = 1.
ScalarMatrix curvature_limit_q1(const TwoFormMatrix& omega);

/// a du^2 + b du dv + c dv^2 (symmetrized products), coefficients functions
/// of commuting u, v.
struct QuadraticForm {
  ScalarExpr a;
  ScalarExpr b;
  ScalarExpr c;
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

using NumericMatrix = std::array<std::array<std::complex<double>, 2>, 2>;

struct LineElement {
  /// g_ij with g_ij g^jk = delta_i^k.
  ScalarMatrix lower;
  /// q~ -> 1 of g_ij th^i th^j with th1 = v u^-1 du, th2 = u v^-1 dv.
  QuadraticForm du_dv;
  /// The same in dt, dr for t = (u + v)/sqrt2, r = (u - v)/sqrt2.
  QuadraticForm dt_dr;
};

/// Throws std::domain_error for a degenerate metric and PoleError when g_ij
/// has a pole at q~ = 1.
LineElement line_element(const Metric& g);

struct NumericSplit {
  NumericMatrix symmetric;
  NumericMatrix antisymmetric;
};

/// g_S, g_A of g^ij at a point.
NumericSplit split_metric(const Metric& g, const UnitEval& at);
/// eta_ij, B_ij of g_ij rescaled so that the first nonzero entry of the
/// symmetric part is 1.
NumericSplit split_inverse_metric(const Metric& g, const UnitEval& at);

/// R^_p with p = q^k given as a power of q.
ScalarMatrix rhat(int q_power);
/// epsilon_p, p = q^k: [[0, -p^(-1/2)], [p^(1/2), 0]].
ScalarMatrix epsilon_q(int q_power);
/// P_{a,p} and P_{s,p} = 1 - P_{a,p}.
ScalarMatrix antisymmetric_projector(int q_power);
ScalarMatrix symmetric_projector(int q_power);

/// S^im_ln g^np S^jk_mp with row (i,j), column (k,l).
ScalarMatrix compat_lhs(const Flip& s, const Metric& g);

struct RhatReport {
  std::vector<CheckResult> checks;
  ScalarExpr factor_plus;   // for S = q^-1 R^_{q^-1}
  ScalarExpr factor_minus;  // for S = q (R^_{q^-1})^-1
  /// c in R^ eps R^ = c eps delta for R^_q and its inverse.
  ScalarExpr rrr_factor_plus;
  ScalarExpr rrr_factor_minus;
};

/// Pi^ij_kl th^k th^l - th^i th^j reduced in the th1 th2 basis, row (i,j).
ScalarMatrix wedge_relations(const ScalarMatrix& pi);

RhatReport rhat_toolkit();

struct PatchingReport {
  /// Lambda with th^i = Lambda^i_j du^j, solved from du, dv.
  std::array<std::array<NCElement, 2>, 2> computed;
  std::array<std::array<NCElement, 2>, 2> displayed;
  bool diagonal = false;
  /// computed / displayed on the diagonal.
  std::array<ScalarExpr, 2> ratio;
  /// det Lambda at q~ = 1 with u, v commuting.
  ScalarExpr det_limit;
};

PatchingReport patching_lambda();

}  // namespace qplane
