#include <cstdlib>
#include <iostream>

#include "aw/suite.hpp"

int main(int argc, char** argv) {
  aw::SuiteOptions opts;
  for (int i = 1; i < argc; ++i) opts.only.insert(std::atoi(argv[i]));
  bool all = true;
  for (const auto& r : aw::run_suite(opts)) {
    std::cout << aw::format_result(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
