#include "qplane/geometry.hpp"

#include <sstream>
#include <stdexcept>

namespace qplane {

namespace {

using Index4 = std::array<std::array<std::array<std::array<NCElement, 2>, 2>, 2>, 2>;

std::size_t pair_index(int i, int j) { return static_cast<std::size_t>(2 * (i - 1) + (j - 1)); }

/// 1/2 R^i_jkl = S^im_rn S^np_sj M^rs_kl lambda_m lambda_p
Curvature curvature_with(const Flip& s, const ScalarMatrix& m, const Calculus& calc) {
  require_flip(s);
  const Presentation& pres = calc.presentation();
  std::array<std::array<NCElement, 2>, 2> ll;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) ll[a - 1][b - 1] = calc.lambda(a) * calc.lambda(b);
  }
  Curvature out;
  out.forms = zero_two_forms(pres);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int k = 1; k <= 2; ++k) {
        for (int l = 1; l <= 2; ++l) {
          NCElement sum(pres);
          for (int mm = 1; mm <= 2; ++mm) {
            for (int p = 1; p <= 2; ++p) {
              ScalarExpr c;
              for (int r = 1; r <= 2; ++r) {
                for (int n = 1; n <= 2; ++n) {
                  const ScalarExpr& a = flip_at(s, i, mm, r, n);
                  if (a.is_zero()) continue;
                  for (int ss = 1; ss <= 2; ++ss) {
                    const ScalarExpr& b = flip_at(s, n, p, ss, j);
                    const ScalarExpr& e = m(pair_index(r, ss), pair_index(k, l));
                    if (!b.is_zero() && !e.is_zero()) c += a * b * e;
                  }
                }
              }
              sum += ll[mm - 1][p - 1].scaled(c);
            }
          }
          out.half_r[i - 1][j - 1][k - 1][l - 1] = sum;
          out.forms[i - 1][j - 1] += sum * wedge(OneForm::frame(pres, k), OneForm::frame(pres, l));
        }
      }
    }
  }
  return out;
}

std::complex<double> numeric(const ScalarExpr& e, const UnitEval& at) { return eval(e, at); }

NumericSplit split_numeric(const NumericMatrix& m) {
  NumericSplit out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      out.symmetric[i][j] = (m[i][j] + m[j][i]) / 2.0;
      out.antisymmetric[i][j] = (m[i][j] - m[j][i]) / 2.0;
    }
  }
  return out;
}

NumericMatrix evaluate(const ScalarMatrix& g, const UnitEval& at) {
  NumericMatrix out{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out[i][j] = numeric(g(i, j), at);
  }
  return out;
}

CheckResult matrix_check(std::string name, const ScalarMatrix& residual) {
  return {std::move(name), residual.is_zero(), residual.is_zero() ? "0" : residual.to_string()};
}

ScalarMatrix metric_delta(const Metric& g) {
  ScalarMatrix out(4, 4);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int k = 1; k <= 2; ++k) out(pair_index(i, j), pair_index(k, k)) = metric_at(g, i, j);
    }
  }
  return out;
}

/// Factor c with lhs = c * rhs, if one exists.
std::optional<ScalarExpr> proportionality(const ScalarMatrix& lhs, const ScalarMatrix& rhs) {
  for (std::size_t i = 0; i < rhs.rows(); ++i) {
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      if (rhs(i, j).is_zero()) continue;
      const ScalarExpr c = lhs(i, j) / rhs(i, j);
      if (lhs == c * rhs) return c;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

OneFormMatrix zero_one_forms(const Presentation& p) {
  const OneForm z = OneForm::zero(p);
  return {{{z, z}, {z, z}}};
}

TwoFormMatrix zero_two_forms(const Presentation& p) {
  const TwoForm z{NCElement(p)};
  return {{{z, z}, {z, z}}};
}

bool operator==(const OneFormMatrix& a, const OneFormMatrix& b) {
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      if (!(a[i][j] == b[i][j])) return false;
    }
  }
  return true;
}

bool operator==(const TwoFormMatrix& a, const TwoFormMatrix& b) {
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      if (!(a[i][j] == b[i][j])) return false;
    }
  }
  return true;
}

std::string to_string(const OneFormMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) os << "[" << i + 1 << "," << j + 1 << "] " << m[i][j].to_string() << "\n";
  }
  return os.str();
}

std::string to_string(const TwoFormMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) os << "[" << i + 1 << "," << j + 1 << "] " << m[i][j].to_string() << "\n";
  }
  return os.str();
}

Connection connection_from_flip(const Flip& s, const Calculus& calc) {
  require_flip(s);
  const Presentation& p = calc.presentation();
  Connection out;
  out.forms = zero_one_forms(p);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int k = 1; k <= 2; ++k) {
        NCElement c(p);
        for (int l = 1; l <= 2; ++l) {
          ScalarExpr e = flip_at(s, i, l, j, k);
          if (l == j && i == k) e -= 1;
          c += calc.lambda(l).scaled(e);
        }
        out.coefficients[i - 1][j - 1][k - 1] = c;
        out.forms[i - 1][k - 1] += c * OneForm::frame(p, j);
      }
    }
  }
  return out;
}

OneFormMatrix connection_one_form(const Flip& s, const Calculus& calc) {
  require_flip(s);
  const Presentation& p = calc.presentation();
  OneFormMatrix out = zero_one_forms(p);
  for (int i = 1; i <= 2; ++i) {
    for (int k = 1; k <= 2; ++k) {
      for (int j = 1; j <= 2; ++j) {
        for (int l = 1; l <= 2; ++l) {
          out[i - 1][k - 1] += calc.lambda(l).scaled(flip_at(s, i, l, j, k)) * OneForm::frame(p, j);
        }
      }
      if (i == k) out[i - 1][k - 1] += calc.theta();
    }
  }
  return out;
}

Curvature curvature(const Flip& s, const Calculus& calc) { return curvature_with(s, wedge_projector(), calc); }

Curvature curvature_alternative(const Flip& s, const Calculus& calc) {
  return curvature_with(s, -(s * wedge_projector()), calc);
}

TwoFormMatrix curvature_from_forms(const OneFormMatrix& omega, const Calculus& calc) {
  TwoFormMatrix out = zero_two_forms(calc.presentation());
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      out[i][k] = calc.d(omega[i][k]);
      for (std::size_t j = 0; j < 2; ++j) out[i][k] += wedge(omega[i][j], omega[j][k]);
    }
  }
  return out;
}

ScalarExpr commutative_limit(const NCElement& f) {
  if (!(f.presentation() == Presentation::uv())) throw PresentationMismatch("commutative limit expects a u,v element");
  ScalarExpr out;
  for (const auto& [k, c] : f.terms()) {
    ScalarExpr at_one;
    try {
      at_one = c.substitute(Var::r, ScalarExpr(1));
    } catch (const DivisionByZero&) {
      throw PoleError("coefficient " + c.to_string() + " of u^" + std::to_string(k.first) + " v^" +
                      std::to_string(k.second) + " has a pole at q~ = 1");
    }
    out += at_one * ScalarExpr::var(Var::u, k.first) * ScalarExpr::var(Var::v, k.second);
  }
  return out;
}

ScalarMatrix curvature_limit_q1(const TwoFormMatrix& omega) {
  ScalarMatrix out(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = commutative_limit(omega[i][j].g);
  }
  return out;
}

LineElement line_element(const Metric& g) {
  require_metric(g);
  LineElement out;
  try {
    out.lower = g.inverse();
  } catch (const DivisionByZero&) {
    throw std::domain_error("degenerate metric has no line element");
  }
  ScalarMatrix lim(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      try {
        lim(i, j) = out.lower(i, j).substitute(Var::r, ScalarExpr(1));
      } catch (const DivisionByZero&) {
        throw PoleError("g_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + out.lower(i, j).to_string() +
                        " has a pole at q~ = 1");
      }
    }
  }
  const ScalarExpr u = ScalarExpr::var(Var::u);
  const ScalarExpr v = ScalarExpr::var(Var::v);
  out.du_dv.a = lim(0, 0) * v * v / (u * u);
  out.du_dv.b = lim(0, 1) + lim(1, 0);
  out.du_dv.c = lim(1, 1) * u * u / (v * v);
  const ScalarExpr half = ScalarExpr::fraction(1, 2);
  const auto& [a, b, c] = out.du_dv;
  out.dt_dr = {half * (a + b + c), a - c, half * (a - b + c)};
  return out;
}

NumericSplit split_metric(const Metric& g, const UnitEval& at) {
  require_metric(g);
  return split_numeric(evaluate(g, at));
}

NumericSplit split_inverse_metric(const Metric& g, const UnitEval& at) {
  require_metric(g);
  NumericMatrix m = evaluate(g, at);
  const std::complex<double> det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (std::abs(det) < 1e-14) throw std::domain_error("degenerate metric at evaluation point");
  const NumericMatrix inv{{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
  NumericSplit s = split_numeric(inv);
  std::complex<double> scale = 0;
  for (const auto& row : s.symmetric) {
    for (const auto& e : row) {
      if (scale == 0.0 && std::abs(e) > 1e-12) scale = e;
    }
  }
  if (scale == 0.0) throw std::domain_error("symmetric part of g_ij vanishes");
  for (auto* part : {&s.symmetric, &s.antisymmetric}) {
    for (auto& row : *part) {
      for (auto& e : row) e /= scale;
    }
  }
  return s;
}

ScalarMatrix rhat(int q_power) {
  const ScalarExpr p = ScalarExpr::q(q_power);
  const ScalarExpr z;
  const ScalarExpr one(1);
  return ScalarMatrix(4, 4, {p, z, z, z, z, p - p.inverse(), one, z, z, one, z, z, z, z, z, p});
}

ScalarMatrix epsilon_q(int q_power) {
  return ScalarMatrix(2, 2, {ScalarExpr(), -ScalarExpr::q_half(-q_power), ScalarExpr::q_half(q_power), ScalarExpr()});
}

ScalarMatrix antisymmetric_projector(int q_power) {
  const ScalarExpr p = ScalarExpr::q(q_power);
  const ScalarExpr n = (p + p.inverse()).inverse();
  ScalarMatrix out(4, 4);
  out(1, 1) = n * p.inverse();
  out(1, 2) = -n;
  out(2, 1) = -n;
  out(2, 2) = n * p;
  return out;
}

ScalarMatrix symmetric_projector(int q_power) { return ScalarMatrix::identity(4) - antisymmetric_projector(q_power); }

ScalarMatrix compat_lhs(const Flip& s, const Metric& g) { return check_compat(s, g).residual + metric_delta(g); }

ScalarMatrix wedge_relations(const ScalarMatrix& pi) {
  const Presentation& p = Presentation::uv();
  ScalarMatrix out(4, 1);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      TwoForm acc = -wedge(OneForm::frame(p, i), OneForm::frame(p, j));
      for (int k = 1; k <= 2; ++k) {
        for (int l = 1; l <= 2; ++l) {
          acc += TwoForm{NCElement(p, pi(pair_index(i, j), pair_index(k, l)))} *
                 wedge(OneForm::frame(p, k), OneForm::frame(p, l)).g;
        }
      }
      out(pair_index(i, j), 0) = acc.g.coefficient(0, 0);
    }
  }
  return out;
}

RhatReport rhat_toolkit() {
  RhatReport out;
  const ScalarExpr q = ScalarExpr::q();
  const ScalarMatrix r = rhat(1);
  const ScalarMatrix ri = r.inverse();

  ScalarMatrix braid = check_braid(r).residual;
  out.checks.push_back(matrix_check("R^_q satisfies the braid relation", braid));
  out.checks.push_back(matrix_check("R^_q = q P_s - q^-1 P_a",
                                    r - (q * symmetric_projector(1) - q.inverse() * antisymmetric_projector(1))));
  out.checks.push_back(matrix_check("P_a,q is a projector",
                                    antisymmetric_projector(1) * antisymmetric_projector(1) - antisymmetric_projector(1)));

  const ScalarMatrix eps = epsilon_q(1);
  for (int sign : {1, -1}) {
    const ScalarMatrix& m = sign == 1 ? r : ri;
    const ScalarExpr factor = ScalarExpr::q(-sign);
    // R^ij_hk eps^kl R^rs_jl against eps^ir delta^s_h, free (i,r) x (s,h)
    ScalarMatrix first(4, 4);
    for (int i = 1; i <= 2; ++i) {
      for (int rr = 1; rr <= 2; ++rr) {
        for (int s = 1; s <= 2; ++s) {
          for (int h = 1; h <= 2; ++h) {
            ScalarExpr sum;
            for (int j = 1; j <= 2; ++j) {
              for (int k = 1; k <= 2; ++k) {
                for (int l = 1; l <= 2; ++l) {
                  sum += flip_at(m, i, j, h, k) * metric_at(eps, k, l) * flip_at(m, rr, s, j, l);
                }
              }
            }
            first(pair_index(i, rr), pair_index(s, h)) = sum;
          }
        }
      }
    }
    const auto found = proportionality(first, metric_delta(eps));
    (sign == 1 ? out.rrr_factor_plus : out.rrr_factor_minus) = found.value_or(ScalarExpr());
    const std::string tag = sign == 1 ? "R^" : "R^^-1";
    out.checks.push_back({tag + " eps R^ = q^" + std::to_string(-sign) + " eps delta",
                          found.has_value() && *found == factor,
                          found ? "factor " + found->to_string() : "not proportional"});
    out.checks.push_back(matrix_check(tag + " eps = -q^" + std::to_string(-sign) + " eps",
                                      m * flatten(eps) + factor * flatten(eps)));
  }

  const ScalarMatrix r_inv_q = rhat(-1);
  ScalarMatrix transposed(4, 4);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int h = 1; h <= 2; ++h) {
        for (int k = 1; k <= 2; ++k) {
          transposed(pair_index(i, j), pair_index(h, k)) = flip_at(r_inv_q, i, j, h, k) - flip_at(ri, j, i, k, h);
        }
      }
    }
  }
  out.checks.push_back(matrix_check("R^_{q^-1}^ij_hk = (R^_q^-1)^ji_kh", transposed));
  out.checks.push_back(matrix_check("P = P_a,q^-1", wedge_projector() - antisymmetric_projector(-1)));
  out.checks.push_back(matrix_check("P_a,q^-1 reproduces the wedge relations", wedge_relations(antisymmetric_projector(-1))));

  const Metric g = epsilon_q(-1);
  const Flip s_plus = q.inverse() * r_inv_q;
  const Flip s_minus = q * r_inv_q.inverse();
  const ScalarMatrix gd = metric_delta(g);
  for (int sign : {1, -1}) {
    const Flip& s = sign == 1 ? s_plus : s_minus;
    const std::string tag = sign == 1 ? "S = q^-1 R^_{q^-1}" : "S = q (R^_{q^-1})^-1";
    const auto factor = proportionality(compat_lhs(s, g), gd);
    (sign == 1 ? out.factor_plus : out.factor_minus) = factor.value_or(ScalarExpr());
    const ScalarExpr expected = ScalarExpr::q(-sign);
    out.checks.push_back({tag + ": compatible up to the factor q^" + std::to_string(-sign),
                          factor.has_value() && *factor == expected,
                          factor ? factor->to_string() : "not proportional"});
    out.checks.push_back(matrix_check(tag + ": SP", check_sp(s).residual));
    out.checks.push_back(matrix_check(tag + ": S g = -g", s * flatten(g) + flatten(g)));
    out.checks.push_back(matrix_check(tag + ": j-s", check_flip_reality(s).residual));
    out.checks.push_back(matrix_check(tag + ": her-f", check_metric_reality(s, g).residual));
    const Curvature c = curvature(s);
    bool flat = true;
    for (const auto& row : c.forms) {
      for (const auto& e : row) flat = flat && e.is_zero();
    }
    out.checks.push_back({tag + ": curvature vanishes", flat, flat ? "0" : to_string(c.forms)});
  }
  return out;
}

PatchingReport patching_lambda() {
  const Calculus& calc = Calculus::uv();
  const OneForm du = calc.d(NCElement::u());
  const OneForm dv = calc.d(NCElement::v());
  PatchingReport out;
  const Presentation p = Presentation::uv();
  out.diagonal = du.f2.is_zero() && dv.f1.is_zero() && du.f1.is_monomial() && dv.f2.is_monomial();
  if (!out.diagonal) throw std::logic_error("du, dv are not diagonal in the frame");
  // du = a th1, dv = b th2  =>  th1 = a^-1 du, th2 = b^-1 dv
  out.computed = {{{du.f1.monomial_inverse(), NCElement(p)}, {NCElement(p), dv.f2.monomial_inverse()}}};
  const ScalarExpr sq = ScalarExpr::q_half();
  out.displayed = {{{(NCElement::v() * NCElement::u(-1)).scaled(sq), NCElement(p)},
                    {NCElement(p), (NCElement::u() * NCElement::v(-1)).scaled(sq)}}};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& [kc, cc] = *out.computed[i][i].terms().begin();
    const auto& [kd, cd] = *out.displayed[i][i].terms().begin();
    if (kc != kd) throw std::logic_error("patching matrices differ in their monomials");
    out.ratio[i] = cc / cd;
  }
  out.det_limit =
      commutative_limit(out.computed[0][0]) * commutative_limit(out.computed[1][1]) -
      commutative_limit(out.computed[0][1]) * commutative_limit(out.computed[1][0]);
  return out;
}

}  // namespace qplane
