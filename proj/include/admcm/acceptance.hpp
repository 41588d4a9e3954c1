#pragma once

#include <string>
#include <vector>

namespace admcm {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct AcceptanceOptions {
  unsigned threads = 1;
  /// Empty runs all twelve.
  std::vector<int> only;
};

/// Runs the acceptance criteria in order. A criterion fails if any check fails
/// or it overruns its time limit.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// "PASS  3 name  (1.23 s / 60 s)  detail"
std::string format_result(const CriterionResult& r);

/// The stored non-CM witness face of gen_counterexample(g), g >= 4, as labels,
/// and the homology index it certifies.
std::vector<std::string> counterexample_witness(int g);
inline constexpr int kCounterexampleWitnessIndex = 0;

}  // namespace admcm
