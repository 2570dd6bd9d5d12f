#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fbeta {

// Pinned parameters of the acceptance checks.
inline constexpr std::size_t kAcceptancePrecision = 200;
inline constexpr long kSigmaSweepLimit = 100000;
inline constexpr int kPropertyCases = 1000;
inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr int kCriterionCount = 12;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CriterionReport {
  int id = 0;
  std::string title;
  double budget_seconds = 0;
  double seconds = 0;
  std::vector<CheckResult> checks;

  bool within_budget() const { return seconds < budget_seconds; }
  bool passed() const;
};

// Runs criterion 1 .. 12. Exceptions inside a check turn into failed checks.
CriterionReport run_criterion(int id, std::uint64_t seed = kDefaultSeed);

// Named groups of checks for the CLI: eta-r, phi, lattice, beta, level-one, qexp, igusa,
// sigma, pipeline, laures, kervaire, chern, properties.
std::vector<std::string> verify_suites();
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed = kDefaultSeed,
                                   std::size_t precision = kAcceptancePrecision);

}  // namespace fbeta
