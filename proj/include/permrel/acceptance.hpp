#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace permrel {

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  /// Seeded random rewrite orders per word in the strategy-independence check.
  int random_orders = 20;
  /// Random triples in the cancellation check.
  int cancellation_triples = 10'000;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceCriterion {
  int id;
  std::string name;
  std::function<CriterionResult(const AcceptanceOptions&)> run;
};

/// The ten acceptance criteria in order.
std::vector<AcceptanceCriterion> acceptance_criteria();

/// Runs every criterion; criterion 10 (reproducibility and total runtime) is
/// evaluated last over the whole run.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "[PASS] 1 name (1.23 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace permrel
