#pragma once

#include <vector>

#include "qplane/conditions.hpp"

namespace qplane {

struct MetricSolutionSpace {
  /// Canonical basis: reduced row echelon form of the basis vectors, each
  /// with leading coordinate 1, as 2x2 metrics.
  std::vector<Metric> basis;
  std::size_t dimension = 0;
  /// Basis over the star-fixed subfield of the metrics in the span that also
  /// satisfy her-f.
  std::vector<Metric> real_rays;
  /// Whether some real combination is nondegenerate.
  bool has_nondegenerate_real = false;
};

/// The 17x4 system: 16 compat rows (row (i,j), column (k,l) flattened as
/// 4*(2i+j)+(2k+l)) followed by g^2 - q g^3. Columns g^1..g^4.
ScalarMatrix metric_system(const Flip& s);

MetricSolutionSpace solve_metric(const Flip& s);

struct DimensionAudit {
  std::size_t equations = 17;
  std::size_t unknowns = 4;
  std::size_t rank = 0;
  std::size_t dimension = 0;
};

DimensionAudit dimension_audit(const Flip& s);

/// Elements of span(basis) satisfying her-f, as a basis over the star-fixed
/// subfield. The condition is semilinear, so coefficients are split as
/// x + i y with x, y fixed by star.
std::vector<Metric> real_subspace(const Flip& s, const std::vector<Metric>& basis);

/// Whether some combination of the given metrics with coefficients in the
/// fixed subfield is invertible. det is quadratic in the coefficients, so it
/// is enough to test single elements and pairwise sums.
bool has_nondegenerate_combination(const std::vector<Metric>& metrics);

}  // namespace qplane
