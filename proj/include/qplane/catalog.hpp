#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qplane/geometry.hpp"

namespace qplane {

enum class Expect { Pass, Fail, Unspecified };

std::string_view to_string(Expect e);

struct SolutionEntry {
  std::string name;
  Flip flip;
  Metric metric;
  std::optional<ScalarMatrix> tau;
  /// Keys from condition_names() plus "tau".
  std::map<std::string, Expect> expected;
  std::optional<bool> tau_invertible;
  std::optional<OneFormMatrix> expected_connection;
  std::optional<TwoFormMatrix> expected_curvature;
  /// th1 th2 coefficients of the curvature at q~ = 1 (commuting u, v).
  std::optional<ScalarMatrix> expected_curvature_limit;
  bool curvature_limit_diverges = false;
};

/// Source text of a stored solution, in the scalar grammar.
struct SolutionText {
  std::vector<std::vector<std::string>> flip;
  std::vector<std::vector<std::string>> metric;
  std::optional<std::vector<std::vector<std::string>>> tau;
};

const std::vector<std::string>& catalog_names();
bool catalog_has(const std::string& name);
/// Whether the entry depends on the family parameter zeta.
bool catalog_takes_zeta(const std::string& name);
const SolutionText& catalog_text(const std::string& name);

/// Builds an entry; zeta stays formal when not given. Throws
/// std::invalid_argument for an unknown name.
SolutionEntry catalog_entry(const std::string& name, const std::optional<ScalarExpr>& zeta = std::nullopt);

}  // namespace qplane
