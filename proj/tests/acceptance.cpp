// One line per acceptance criterion. Every criterion is exact (zero tolerance);
// criteria 1, 7 and 9 additionally carry a wall-clock limit.

#include <cstdio>
#include <iostream>

#include "hypermat/verify.hpp"

using namespace hypermat;

int main() {
  const VerifyOptions options;  // seed 1729, oracle up to d = 12
  int failed = 0;
  for (const auto* target : acceptance_criteria()) {
    const auto outcome = run_verify_target(*target, options);
    std::string limit = target->time_limit_seconds ? ", runtime < " + std::to_string(static_cast<int>(*target->time_limit_seconds)) + " s" : "";
    std::printf("criterion %d [%s]: %s (tolerance: exact%s; took %.3f s)\n", target->number,
                std::string(target->name).c_str(), outcome.passed() ? "PASS" : "FAIL", limit.c_str(), outcome.seconds);
    if (!outcome.passed()) {
      ++failed;
      for (const auto& c : outcome.report.checks)
        if (!c.passed) std::cerr << "  criterion " << target->number << " failed check: " << c.name << ": " << c.detail << '\n';
    }
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
