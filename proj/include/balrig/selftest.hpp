#pragma once

#include <functional>
#include <string>
#include <vector>

#include "balrig/trial.hpp"

namespace balrig {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult(const TrialPolicy&)> run;
};

/// The acceptance properties, in a fixed order. Each run is deterministic in
/// the policy; exceptions inside a run count as a failure.
const std::vector<Criterion>& acceptance_criteria();

CriterionResult run_criterion(const Criterion& c, const TrialPolicy& policy);

}  // namespace balrig
