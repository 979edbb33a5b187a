#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "houghton/io.hpp"

namespace houghton {

struct SuiteReport {
  std::string name;
  std::string alias;     // anchor name accepted on the command line
  std::string property;  // one-line statement of what every trial checks
  std::uint64_t seed = 0;
  int trials = 0;
  int checks = 0;                 // individual assertions evaluated
  std::vector<Json> failures;     // counterexample payloads
  std::vector<std::string> notes; // per-trial observations
  double seconds = 0;             // wall time, kept out of the JSON report

  bool ok() const { return failures.empty(); }
};

struct SuiteInfo {
  std::string name;
  std::string alias;
  std::string property;
};

const std::vector<SuiteInfo>& suite_catalog();
// Accepts a name or an alias. Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed);

Json to_json(const SuiteReport& r);
std::string to_string(const SuiteReport& r);

// Deterministic per-trial seed.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

}  // namespace houghton
