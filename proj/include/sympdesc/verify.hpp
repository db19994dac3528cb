// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

namespace sympdesc {

struct SuiteReport {
  std::string name;
  long cases = 0;
  long failures = 0;
  double seconds = 0.0;
  // First few failure descriptions.
  std::vector<std::string> messages;
  bool passed() const noexcept { return failures == 0; }
};

// "consistency": descent route equals support route.
// "properties": adjacent-step bounds, l_i >= l_{i+2}, tilde partition
// monotone with total 2n, first part in {2l0, 2l0+1}, branching exactly at
// equal boundary values.
// "all": both. jobs <= 0 means hardware concurrency.
std::vector<SuiteReport> run_verification(int max_rank, const std::string& suite, int jobs);

}  // namespace sympdesc
