#include "qplane/json_io.hpp"

#include <fstream>

namespace qplane {

ScalarMatrix matrix_from_json(const nlohmann::json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw SchemaError(what + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " array");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw SchemaError(what + " rows must have " + std::to_string(n) + " entries");
    std::vector<std::string> r;
    for (const auto& e : row) {
      if (e.is_string()) {
        r.push_back(e.get<std::string>());
      } else if (e.is_number_integer()) {
        r.push_back(std::to_string(e.get<long>()));
      } else {
        throw SchemaError(what + " entries must be strings in the scalar grammar");
      }
    }
    rows.push_back(std::move(r));
  }
  return ScalarMatrix::parse(rows);
}

nlohmann::json matrix_to_json(const ScalarMatrix& m) { return m.to_strings(); }

FlipInput flip_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("flip")) throw SchemaError("expected an object with key \"flip\"");
  FlipInput in{matrix_from_json(j.at("flip"), 4, "flip"), std::nullopt};
  if (j.contains("tau")) in.tau = matrix_from_json(j.at("tau"), 4, "tau");
  return in;
}

Metric metric_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("metric")) throw SchemaError("expected an object with key \"metric\"");
  return matrix_from_json(j.at("metric"), 2, "metric");
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

nlohmann::json to_json(const ConditionResult& r) {
  nlohmann::json j{{"condition", r.name}, {"pass", r.pass}, {"residual", matrix_to_json(r.residual)}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const CheckResult& r) { return {{"name", r.name}, {"pass", r.pass}, {"detail", r.residual}}; }

}  // namespace qplane
