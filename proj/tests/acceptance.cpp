// One pass/fail line per acceptance criterion, failing checks listed beneath.

#include <cstdlib>
#include <iostream>
#include <string>

#include "a5/common/error.hpp"
#include "a5/verify/suite.hpp"

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int k = 1; k < argc; ++k) selected.push_back(std::atoi(argv[k]));
  if (selected.empty())
    for (int c = 1; c <= 10; ++c) selected.push_back(c);

  const a5::Fixtures fx = a5::Fixtures::load();
  bool all = true;
  for (int c : selected) {
    const a5::Report r = a5::run_criterion(c, fx);
    const bool ok = r.criterion_passed(c);
    all = all && ok;
    std::cout << "criterion " << c << ": " << (ok ? "PASS" : "FAIL") << '\n';
    for (const auto& check : r.checks())
      if (!check.passed && check.criterion == c) std::cout << "    " << check.id << ": " << check.details << '\n';
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
