// Acceptance runner: one line per criterion, failing checks listed underneath.
#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "fbeta/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fbeta acceptance criteria"};
  int only = 0;
  std::uint64_t seed = fbeta::kDefaultSeed;
  bool verbose = false;
  app.add_option("--criterion", only, "run a single criterion (1-12)")->check(CLI::Range(1, fbeta::kCriterionCount));
  app.add_option("--seed", seed, "seed for the randomized suites");
  app.add_flag("-v,--verbose", verbose, "list every check");
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (int id = 1; id <= fbeta::kCriterionCount; ++id) {
    if (only && id != only) continue;
    fbeta::CriterionReport r = fbeta::run_criterion(id, seed);
    bool ok = r.passed();
    all_ok = all_ok && ok;
    std::printf("criterion %2d %s  %s (%.2f s, budget %.0f s)\n", id, ok ? "PASS" : "FAIL", r.title.c_str(),
                r.seconds, r.budget_seconds);
    if (!r.within_budget()) std::printf("    over the time budget\n");
    for (const auto& c : r.checks) {
      if (c.passed && !verbose) continue;
      std::printf("    [%s] %s%s%s\n", c.passed ? "ok" : "FAILED", c.name.c_str(), c.detail.empty() ? "" : ": ",
                  c.detail.c_str());
    }
  }
  return all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
