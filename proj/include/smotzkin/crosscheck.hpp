#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace smotzkin {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t compared = 0;
  // First failure, or a summary on success.
  std::string detail;
};

struct FaultInjection {
  int n;
  int k;
};

struct CrosscheckOptions {
  int n_max = 60;
  int oracle_bound = 12;
  // Debug only: bumps a_{n,k} in the DP table before any comparison.
  std::optional<FaultInjection> fault;
};

// Runs every cross-route check group in a fixed order.
std::vector<CheckResult> run_crosscheck(const CrosscheckOptions& options);

}  // namespace smotzkin
