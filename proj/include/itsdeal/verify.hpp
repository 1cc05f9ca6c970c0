#pragma once

#include <string>
#include <vector>

namespace itsdeal {

struct VerifyGroup {
  std::string name;
  bool passed = true;
  long checks = 0;
  long failures = 0;
  std::string detail;  // first failure or a short summary
};

struct VerifyOptions {
  /// "delta-violation" under-reports delta in the gradient-error group so it must fail.
  std::string fixture;
  unsigned long long seed = 12345;
};

/// Groups: kappa, basic_inequality, quartic_prox, absolute_gradient_error,
/// relative_gradient_error, finite_differences, weak_convexity.
std::vector<VerifyGroup> run_verify(const VerifyOptions& opts = {});

/// {"passed": bool, "groups": [{name, passed, checks, failures, detail}, ...]}
std::string verify_report_json(const std::vector<VerifyGroup>& groups);

}  // namespace itsdeal
