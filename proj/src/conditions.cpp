#include "qplane/conditions.hpp"

#include <stdexcept>

#include "qplane/forms.hpp"

namespace qplane {

namespace {

ScalarExpr delta(int a, int b) { return a == b ? ScalarExpr(1) : ScalarExpr(); }

std::size_t pair_index(int i, int j) { return static_cast<std::size_t>(2 * (i - 1) + (j - 1)); }

ConditionResult result(std::string name, ScalarMatrix residual) {
  const bool pass = residual.is_zero();
  return {std::move(name), pass, std::move(residual), {}};
}

}  // namespace

ScalarMatrix flatten(const Metric& g) {
  require_metric(g);
  return ScalarMatrix(4, 1, {g(0, 0), g(0, 1), g(1, 0), g(1, 1)});
}

Metric unflatten(const std::vector<ScalarExpr>& g) {
  if (g.size() != 4) throw std::invalid_argument("a metric has four components");
  return ScalarMatrix(2, 2, g);
}

void require_flip(const Flip& s) {
  if (s.rows() != 4 || s.cols() != 4) throw std::invalid_argument("a flip is a 4x4 matrix");
}

void require_metric(const Metric& g) {
  if (g.rows() != 2 || g.cols() != 2) throw std::invalid_argument("a metric is a 2x2 matrix");
}

bool is_degenerate(const Metric& g) {
  require_metric(g);
  return g.determinant().is_zero();
}

bool is_invertible(const ScalarMatrix& m) { return !m.determinant().is_zero(); }

ConditionResult check_sp(const Flip& s) {
  require_flip(s);
  return result("SP", (ScalarMatrix::identity(4) + s) * wedge_projector());
}

ConditionResult check_sp_components(const Flip& s) {
  require_flip(s);
  const ScalarExpr q = ScalarExpr::q();
  const std::vector<ScalarExpr> shift{ScalarExpr(), q, ScalarExpr(-1), ScalarExpr()};
  ScalarMatrix res(4, 1);
  for (std::size_t a = 0; a < 4; ++a) res(a, 0) = s(a, 2) - q * s(a, 1) - shift[a];
  return result("SP components", res);
}

ConditionResult check_symmetry(const Metric& g) { return result("Pg", wedge_projector() * flatten(g)); }

ScalarExpr symmetry_scalar(const Metric& g) {
  require_metric(g);
  return g(0, 1) - ScalarExpr::q() * g(1, 0);
}

ConditionResult check_compat(const Flip& s, const Metric& g) {
  require_flip(s);
  require_metric(g);
  ScalarMatrix res(4, 4);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int k = 1; k <= 2; ++k) {
        for (int l = 1; l <= 2; ++l) {
          ScalarExpr sum;
          for (int m = 1; m <= 2; ++m) {
            for (int n = 1; n <= 2; ++n) {
              const ScalarExpr& a = flip_at(s, i, m, l, n);
              if (a.is_zero()) continue;
              for (int p = 1; p <= 2; ++p) {
                const ScalarExpr& b = metric_at(g, n, p);
                const ScalarExpr& c = flip_at(s, j, k, m, p);
                if (!b.is_zero() && !c.is_zero()) sum += a * b * c;
              }
            }
          }
          res(pair_index(i, j), pair_index(k, l)) = sum - metric_at(g, i, j) * delta(k, l);
        }
      }
    }
  }
  return result("compat", res);
}

ScalarMatrix s_of_g(const Flip& s, const Metric& g) {
  require_flip(s);
  const ScalarMatrix gf = flatten(g);
  // Entry (R, C) = S^A_B1 g^c1 + S^A_B2 g^c2 with A set by the row block and
  // column half, (B1, B2) by column parity and (c1, c2) by row parity.
  static constexpr int kUpper[4][4] = {{1, 1, 3, 3}, {1, 1, 3, 3}, {2, 2, 4, 4}, {2, 2, 4, 4}};
  static constexpr int kLower[4][2] = {{1, 2}, {3, 4}, {1, 2}, {3, 4}};
  static constexpr int kMetric[4][2] = {{1, 3}, {2, 4}, {1, 3}, {2, 4}};
  ScalarMatrix out(4, 4);
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < 4; ++col) {
      const std::size_t a = static_cast<std::size_t>(kUpper[row][col] - 1);
      const std::size_t b1 = static_cast<std::size_t>(kLower[col][0] - 1);
      const std::size_t b2 = static_cast<std::size_t>(kLower[col][1] - 1);
      const std::size_t c1 = static_cast<std::size_t>(kMetric[row][0] - 1);
      const std::size_t c2 = static_cast<std::size_t>(kMetric[row][1] - 1);
      out(row, col) = s(a, b1) * gf(c1, 0) + s(a, b2) * gf(c2, 0);
    }
  }
  return out;
}

ConditionResult check_compat_matrix(const Flip& s, const Metric& g) {
  const ScalarMatrix gf = flatten(g);
  const ScalarExpr z;
  const ScalarMatrix rhs(4, 4,
                         {gf(0, 0), z, gf(2, 0), z,  //
                          z, gf(0, 0), z, gf(2, 0),  //
                          gf(1, 0), z, gf(3, 0), z,  //
                          z, gf(1, 0), z, gf(3, 0)});
  return result("compat (matrix form)", s * s_of_g(s, g) - rhs);
}

ConditionResult check_flip_reality(const Flip& s) {
  require_flip(s);
  ScalarMatrix res(4, 4);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 2; ++n) {
          ScalarExpr sum;
          for (int k = 1; k <= 2; ++k) {
            for (int l = 1; l <= 2; ++l) {
              const ScalarExpr& a = flip_at(s, j, i, k, l);
              const ScalarExpr& b = flip_at(s, l, k, m, n);
              if (!a.is_zero() && !b.is_zero()) sum += a.star() * b;
            }
          }
          res(pair_index(i, j), pair_index(m, n)) = sum - delta(i, m) * delta(j, n);
        }
      }
    }
  }
  return result("j-s", res);
}

ConditionResult check_metric_reality(const Flip& s, const Metric& g) {
  require_flip(s);
  require_metric(g);
  ScalarMatrix res(2, 2);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      ScalarExpr sum;
      for (int k = 1; k <= 2; ++k) {
        for (int l = 1; l <= 2; ++l) sum += flip_at(s, i, j, k, l) * metric_at(g, k, l);
      }
      res(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = sum - metric_at(g, j, i).star();
    }
  }
  return result("her-f", res);
}

ScalarMatrix braid_s12(const Flip& s) {
  require_flip(s);
  ScalarMatrix out(8, 8);
  for (std::size_t ab = 0; ab < 4; ++ab) {
    for (std::size_t de = 0; de < 4; ++de) {
      for (std::size_t c = 0; c < 2; ++c) out(2 * ab + c, 2 * de + c) = s(ab, de);
    }
  }
  return out;
}

ScalarMatrix braid_s23(const Flip& s) {
  require_flip(s);
  ScalarMatrix out(8, 8);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t bc = 0; bc < 4; ++bc) {
      for (std::size_t ef = 0; ef < 4; ++ef) out(4 * a + bc, 4 * a + ef) = s(bc, ef);
    }
  }
  return out;
}

ConditionResult check_braid(const Flip& s) {
  const ScalarMatrix a = braid_s12(s);
  const ScalarMatrix b = braid_s23(s);
  return result("braid", a * b * a - b * a * b);
}

ConditionResult check_tau(const Flip& s, const ScalarMatrix& t) {
  require_flip(s);
  if (t.rows() != 4 || t.cols() != 4) throw std::invalid_argument("T is a 4x4 matrix");
  const ScalarMatrix one = ScalarMatrix::identity(4);
  ConditionResult r = result("tau", (one + s) - (one - wedge_projector()) * t);
  r.note = is_invertible(t) ? "T invertible" : "T not invertible";
  return r;
}

const ConditionResult& ConditionReport::at(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no condition named " + name);
}

bool ConditionReport::all_pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

ConditionReport check_all(const Flip& s, const Metric& g, const std::optional<ScalarMatrix>& t) {
  ConditionReport report;
  report.entries.push_back(check_sp(s));
  report.entries.push_back(check_symmetry(g));
  report.entries.push_back(check_compat(s, g));
  report.entries.push_back(check_flip_reality(s));
  report.entries.push_back(check_metric_reality(s, g));
  report.entries.push_back(check_braid(s));
  if (t) report.entries.push_back(check_tau(s, *t));
  return report;
}

}  // namespace qplane
