#pragma once

/*
  Self-check suites behind the verify subcommand: every oracle the project
  relies on, run at user-selected sizes. Each suite reports a pass/fail flag,
  the number of individual checks performed, and the failures in detail.
*/

#include <cstdint>
#include <string>
#include <vector>

namespace eo::verify {

struct Options {
  int max_g = 4;
  std::vector<std::uint64_t> primes = {2};
  int jobs = 1;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::int64_t checks = 0;
  std::vector<std::string> failures;
};

SuiteResult run_weyl(const Options& opts);
SuiteResult run_strata(const Options& opts);
SuiteResult run_dieudonne(const Options& opts);
SuiteResult run_census(const Options& opts);

// which: "all" or one of weyl | strata | dieudonne | census.
std::vector<SuiteResult> run_suites(const std::string& which, const Options& opts);

}  // namespace eo::verify
