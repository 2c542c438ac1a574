#pragma once

#include <string>
#include <vector>

namespace zonal {

enum class CheckLevel { Fast, Full };

struct CheckResult {
  std::string name;
  double max_residual;
  double tolerance;
  bool pass;
};

/// Runs the polynomial-identity and space-model suites:
/// reflection, boundedness, the (1-t)R_k recurrence, c_0 = 1, the
/// Gegenbauer bridge, embedding isometry, zonal-argument invariance, and the
/// addition-formula positive-semidefiniteness consequence. Full level adds
/// the k = 10^4 decay and ratio limits.
std::vector<CheckResult> run_identity_checks(CheckLevel level);

/// The k = 10^4 limit checks alone (the Full-level additions).
std::vector<CheckResult> run_limit_checks();

}  // namespace zonal
