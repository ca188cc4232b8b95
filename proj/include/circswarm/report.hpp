#pragma once

#include <string>
#include <vector>

#include "circswarm/scenario.hpp"

namespace circswarm {

/// Eigenvalue table, dominant set, limit class and (when mode 0 dominates
/// alone) the predicted formation direction.
std::string spectrum_report(const ScenarioConfig& config);

enum class CheckStatus { Pass, Fail, Info };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

/// Numerical self-checks for a scenario: reconstruction, modal vs direct
/// evolution, invariance and beacon embedding.
std::vector<CheckResult> verify_scenario(const ScenarioConfig& config);

std::string format_checks(const std::vector<CheckResult>& checks);
bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace circswarm
