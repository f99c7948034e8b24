#pragma once

#include <string>
#include <vector>

namespace qplane {

/// Outcome of an identity check whose residual is not a scalar tensor
/// (algebra elements, forms): the residual is kept in its text form.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string residual;
};

inline bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace qplane
