#include <cstdio>
#include <iostream>

#include "htr/verify.hpp"

// One line per criterion; exit status is the number of failing criteria.
int main() {
  int failed = 0;
  for (const auto& r : htr::run_all_suites()) {
    std::printf("criterion %d: %s  %-26s %5d checks  %8.3fs (limit %gs)\n", r.id, r.pass() ? "PASS" : "FAIL",
                r.name.c_str(), r.checks, r.seconds, r.limit_seconds);
    for (const auto& f : r.failures) std::printf("    failed: %s\n", f.c_str());
    if (r.correct && !r.pass()) std::printf("    over time limit\n");
    failed += r.pass() ? 0 : 1;
  }
  std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << std::endl;
  return failed;
}
