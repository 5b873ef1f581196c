#pragma once

#include <string>
#include <vector>

namespace mwave {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the full verification battery; each entry is one quantitative claim
// checked at its pinned tolerance.
std::vector<CriterionResult> run_acceptance();

}  // namespace mwave
