#pragma once

#include <string>
#include <vector>

namespace deltakern::selftest {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Invariant suites and oracle equivalence on small grids; budget well
// under two minutes.
std::vector<SuiteResult> run_fast(int threads, unsigned seed);

// The full desk-scale battery: every numbered acceptance experiment.
std::vector<SuiteResult> run_full(int threads, unsigned seed);

}  // namespace deltakern::selftest
