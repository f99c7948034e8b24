#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qplane/matrix.hpp"

namespace qplane {

/// S^ij_kl as a 4x4 matrix, row = upper pair, pairs flattened 11,12,21,22.
using Flip = ScalarMatrix;
/// g^ij as a 2x2 matrix.
using Metric = ScalarMatrix;

/// 1-based tensor access.
inline const ScalarExpr& flip_at(const Flip& s, int i, int j, int k, int l) {
  return s(static_cast<std::size_t>(2 * (i - 1) + (j - 1)), static_cast<std::size_t>(2 * (k - 1) + (l - 1)));
}
inline const ScalarExpr& metric_at(const Metric& g, int i, int j) {
  return g(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
}
/// (g^11, g^12, g^21, g^22) as a column.
ScalarMatrix flatten(const Metric& g);
Metric unflatten(const std::vector<ScalarExpr>& g);

void require_flip(const Flip& s);
void require_metric(const Metric& g);
bool is_degenerate(const Metric& g);

struct ConditionResult {
  std::string name;
  bool pass = false;
  ScalarMatrix residual;
  /// Extra information, e.g. whether T is invertible.
  std::string note;
};

/// (1 + S) P = 0.
ConditionResult check_sp(const Flip& s);
/// Component form of the same condition: S^A_3 - q S^A_2 against the
/// constants (0, q, -1, 0) in flattened indices.
ConditionResult check_sp_components(const Flip& s);
/// P g = 0.
ConditionResult check_symmetry(const Metric& g);
/// g^2 - q g^3 in flattened indices.
ScalarExpr symmetry_scalar(const Metric& g);
/// S^im_ln g^np S^jk_mp - g^ij delta^k_l; residual row (i,j), column (k,l).
ConditionResult check_compat(const Flip& s, const Metric& g);
/// The same condition in the matrix form S x S_(g) = G.
ConditionResult check_compat_matrix(const Flip& s, const Metric& g);
/// S_(g) as displayed entrywise (flattened indices).
ScalarMatrix s_of_g(const Flip& s, const Metric& g);
/// (S^ji_kl)* S^lk_mn - delta^i_m delta^j_n; residual row (i,j), column (m,n).
ConditionResult check_flip_reality(const Flip& s);
/// S^ij_kl g^kl - (g^ji)*; residual as 2x2.
ConditionResult check_metric_reality(const Flip& s, const Metric& g);
/// S12 S23 S12 - S23 S12 S23 as 8x8, triple index (a,b,c) flattened 4a+2b+c.
ConditionResult check_braid(const Flip& s);
/// (1 + S) - (1 - P) T, with a note on the invertibility of T.
ConditionResult check_tau(const Flip& s, const ScalarMatrix& t);
bool is_invertible(const ScalarMatrix& m);

/// S12 and S23 on the triple tensor product.
ScalarMatrix braid_s12(const Flip& s);
ScalarMatrix braid_s23(const Flip& s);

struct ConditionReport {
  std::vector<ConditionResult> entries;
  const ConditionResult& at(const std::string& name) const;
  bool all_pass() const;
};

/// SP, Pg, compat, j-s, her-f, braid, and tau when T is given.
ConditionReport check_all(const Flip& s, const Metric& g, const std::optional<ScalarMatrix>& t = std::nullopt);

inline const std::vector<std::string>& condition_names() {
  static const std::vector<std::string> names{"SP", "Pg", "compat", "j-s", "her-f", "braid"};
  return names;
}

}  // namespace qplane
