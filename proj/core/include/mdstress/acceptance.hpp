#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mdstress {

/// Configuration of the full verification battery.
struct AcceptanceConfig {
  std::uint64_t seed = 42;
  int heavy_trials = 10000;  // randomized-jet suites
  int light_trials = 1000;   // per-point / per-transform suites
  bool corrupt_gamma = false;  // negative control: perturb one gamma entry
};

struct CriterionResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;     // worst normalized residual (or ratio where noted)
  double threshold = 0.0; // pinned tolerance
  std::string detail;     // one-line summary
};

struct AcceptanceOutcome {
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
};

/// Run every acceptance criterion and return per-criterion outcomes.
AcceptanceOutcome run_acceptance(const AcceptanceConfig& cfg);

/// Deterministic multi-line text report, one pass/fail line per criterion.
/// Contains no timestamps or timings.
std::string acceptance_report(const AcceptanceOutcome& outcome);

}  // namespace mdstress
