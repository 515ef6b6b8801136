#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmm/linalg.hpp"

namespace pmm {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
};

/// Names accepted by run_selftest.
const std::vector<std::string>& selftest_suites();

/// Runs one battery. `n` is ignored by suites with a fixed size.
/// Throws std::invalid_argument on an unknown suite.
SuiteReport run_selftest(const std::string& suite, int n, std::uint64_t seed = 1);

/// The four-term tuple and the four restriction limits of the worked example
/// for diag(1, t, t^2, t^3) and (B_0(t), B_1(t)), as displayed there.
struct WorkedExample {
  std::vector<RationalMatrix> tuple;
  std::vector<RationalMatrix> restriction_limits;
};
WorkedExample worked_example_expected();
WorkedExample worked_example_computed();

}  // namespace pmm
