#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qplane/check_result.hpp"
#include "qplane/conditions.hpp"

namespace qplane {

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square matrix of scalar-grammar strings (integers are also accepted).
ScalarMatrix matrix_from_json(const nlohmann::json& j, std::size_t n, const std::string& what);
nlohmann::json matrix_to_json(const ScalarMatrix& m);

struct FlipInput {
  Flip flip;
  std::optional<ScalarMatrix> tau;
};

/// {"flip": 4x4, "tau": optional 4x4}
FlipInput flip_from_json(const nlohmann::json& j);
/// {"metric": 2x2}
Metric metric_from_json(const nlohmann::json& j);

/// Reads and parses a JSON file; throws SchemaError on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);

/// {"condition", "pass", "residual"} plus "note" when present.
nlohmann::json to_json(const ConditionResult& r);
nlohmann::json to_json(const CheckResult& r);

}  // namespace qplane
