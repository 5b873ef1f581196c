// Integration gate: runs every quantitative criterion at its pinned tolerance
// and prints one pass/fail line each.
#include <cstdio>

#include "mwave/acceptance.hpp"

int main() {
  auto results = mwave::run_acceptance();
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %2d %-45s %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
  return all ? 0 : 1;
}
