#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace zonal {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20250810;
};

/// Runs the full verification suite (12 criteria).  on_result, when given,
/// is invoked after each criterion completes; exceptions inside a criterion
/// are reported as failures rather than propagated.
std::vector<CriterionResult> run_acceptance(
    const VerifyOptions& options = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace zonal
