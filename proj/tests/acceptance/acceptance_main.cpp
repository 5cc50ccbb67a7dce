// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fail.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "einf/verify/suites.hpp"

int main(int argc, char** argv) {
  einf::verify::SuiteOptions opt;
  std::vector<int> only;
  CLI::App app{"acceptance criteria"};
  app.add_option("--seed", opt.seed, "Seed for every randomized suite");
  app.add_option("--criterion", only, "Criteria to run (default: all)")->check(CLI::Range(1, 9));
  app.add_option("--scale", opt.scale, "Multiply sample counts")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  int failed = 0;
  for (const auto& c : einf::verify::criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto r = c.run(opt);
    std::cout << r.line() << '\n';
    for (const auto& s : r.failure_samples) std::cout << "      " << s << '\n';
    for (const auto& n : r.notes) std::cout << "      note: " << n << '\n';
    std::cout.flush();
    if (!r.passed()) ++failed;
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " criteria" : std::string("all criteria passed")) << '\n';
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
