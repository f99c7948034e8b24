#include "qplane/solver.hpp"

namespace qplane {

namespace {

Metric unit_metric(std::size_t n) {
  Metric g(2, 2);
  g(n / 2, n % 2) = ScalarExpr(1);
  return g;
}

std::vector<ScalarExpr> entries(const Metric& g) { return {g(0, 0), g(0, 1), g(1, 0), g(1, 1)}; }

/// (e + e*)/2 and (e - e*)/(2i), both fixed by star.
std::pair<ScalarExpr, ScalarExpr> split(const ScalarExpr& e) {
  const ScalarExpr s = e.star();
  return {(e + s) * ScalarExpr::fraction(1, 2), (e - s) * (ScalarExpr::i() * 2).inverse()};
}

}  // namespace

ScalarMatrix metric_system(const Flip& s) {
  require_flip(s);
  ScalarMatrix a(17, 4);
  for (std::size_t n = 0; n < 4; ++n) {
    const Metric e = unit_metric(n);
    const ScalarMatrix r = check_compat(s, e).residual;
    for (std::size_t row = 0; row < 4; ++row) {
      for (std::size_t col = 0; col < 4; ++col) a(4 * row + col, n) = r(row, col);
    }
    a(16, n) = symmetry_scalar(e);
  }
  return a;
}

MetricSolutionSpace solve_metric(const Flip& s) {
  MetricSolutionSpace out;
  const auto null = nullspace(metric_system(s));
  out.dimension = null.size();
  if (!null.empty()) {
    ScalarMatrix rows(null.size(), 4);
    for (std::size_t k = 0; k < null.size(); ++k) {
      for (std::size_t n = 0; n < 4; ++n) rows(k, n) = null[k][n];
    }
    const RowEchelon rref = row_reduce(rows);
    for (std::size_t k = 0; k < rref.rank(); ++k) {
      std::vector<ScalarExpr> v(4);
      for (std::size_t n = 0; n < 4; ++n) v[n] = rref.matrix(k, n);
      out.basis.push_back(unflatten(v));
    }
  }
  out.real_rays = real_subspace(s, out.basis);
  out.has_nondegenerate_real = has_nondegenerate_combination(out.real_rays);
  return out;
}

DimensionAudit dimension_audit(const Flip& s) {
  DimensionAudit out;
  const RowEchelon rref = row_reduce(metric_system(s));
  out.rank = rref.rank();
  out.dimension = out.unknowns - out.rank;
  return out;
}

std::vector<Metric> real_subspace(const Flip& s, const std::vector<Metric>& basis) {
  if (basis.empty()) return {};
  // columns: x_1..x_d, y_1..y_d; rows: real and imaginary parts of the
  // four her-f components
  const std::size_t d = basis.size();
  std::vector<Metric> generators;
  for (const auto& b : basis) generators.push_back(b);
  for (const auto& b : basis) generators.push_back(ScalarExpr::i() * b);
  ScalarMatrix a(8, 2 * d);
  for (std::size_t c = 0; c < 2 * d; ++c) {
    const ScalarMatrix r = check_metric_reality(s, generators[c]).residual;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto [re, im] = split(r(k / 2, k % 2));
      a(k, c) = re;
      a(4 + k, c) = im;
    }
  }
  std::vector<Metric> out;
  for (const auto& x : nullspace(a)) {
    Metric g(2, 2);
    for (std::size_t c = 0; c < 2 * d; ++c) g += x[c] * generators[c];
    if (!g.is_zero()) out.push_back(g);
  }
  // canonical form over the fixed field
  if (!out.empty()) {
    ScalarMatrix rows(out.size(), 8);
    for (std::size_t k = 0; k < out.size(); ++k) {
      const auto e = entries(out[k]);
      for (std::size_t n = 0; n < 4; ++n) {
        const auto [re, im] = split(e[n]);
        rows(k, 2 * n) = re;
        rows(k, 2 * n + 1) = im;
      }
    }
    const RowEchelon rref = row_reduce(rows);
    out.clear();
    for (std::size_t k = 0; k < rref.rank(); ++k) {
      std::vector<ScalarExpr> v(4);
      for (std::size_t n = 0; n < 4; ++n) v[n] = rref.matrix(k, 2 * n) + ScalarExpr::i() * rref.matrix(k, 2 * n + 1);
      out.push_back(unflatten(v));
    }
  }
  return out;
}

bool has_nondegenerate_combination(const std::vector<Metric>& metrics) {
  for (std::size_t a = 0; a < metrics.size(); ++a) {
    if (!metrics[a].determinant().is_zero()) return true;
    for (std::size_t b = a + 1; b < metrics.size(); ++b) {
      if (!(metrics[a] + metrics[b]).determinant().is_zero()) return true;
    }
  }
  return false;
}

}  // namespace qplane
