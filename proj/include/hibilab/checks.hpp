#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hibilab {

struct CheckOptions {
  int n = 4;
  int m = 0;  // 0 means n
  std::uint64_t seed = 1;
  int trials = 100;
  std::size_t max_nodes = 24;
};

struct CheckReport {
  std::string suite;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string counterexample;  // empty when passed
};

const std::vector<std::string>& check_suite_names();

/// Runs one invariant suite.  Throws ValidationError for an unknown name
/// or out-of-range bounds.
CheckReport run_check(std::string_view suite, const CheckOptions& opt);

/// "suite=<name> status=pass|fail cases=<N>".
std::string summary_line(const CheckReport& r);

}  // namespace hibilab
