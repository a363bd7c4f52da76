#pragma once

#include <string>
#include <vector>

namespace prioritaire {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long checked = 0;
  /// First failing case, empty when the suite passed.
  std::string counterexample;
};

/// Runs the invariant suites of every module up to tree level `depth`.
std::vector<SuiteResult> run_selfcheck(unsigned depth);

}  // namespace prioritaire
