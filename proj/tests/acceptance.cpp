#include <iomanip>
#include <iostream>

#include "orthocyc/verify.hpp"

int main() {
  using namespace orthocyc::verify;
  Options opts;
  int failed = 0;
  run_suite("all", opts, [&](const CriterionResult& r) {
    failed += !r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed
              << std::setprecision(2) << r.seconds << " s): " << r.detail << std::endl;
  });
  return failed ? 1 : 0;
}
