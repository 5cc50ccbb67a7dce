#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace einf::verify {

struct SuiteOptions {
  std::uint64_t seed = 20240917;
  double scale = 1.0;  // multiplies every sample count
};

struct SuiteResult {
  int id = 0;
  std::string title;
  double limit_seconds = 0;
  double seconds = 0;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> failure_samples;  // first few
  std::vector<std::string> notes;            // informational, never asserted

  bool passed() const { return failures == 0 && checks > 0 && seconds <= limit_seconds; }
  void expect(bool ok, const std::string& what);
  // "PASS  [1] title (n checks, k failed, t s of limit s)"; without timing the
  // line depends on the seed only.
  std::string line(bool timing = true) const;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  SuiteResult (*run)(const SuiteOptions&);
};

const std::vector<Criterion>& criteria();
SuiteResult run_criterion(int id, const SuiteOptions& opt);

SuiteResult confluence_suite(const SuiteOptions& opt);
SuiteResult basis_count_suite(const SuiteOptions& opt);
SuiteResult differential_suite(const SuiteOptions& opt);
SuiteResult act_suite(const SuiteOptions& opt);
SuiteResult steenrod_suite(const SuiteOptions& opt);
SuiteResult cw_suite(const SuiteOptions& opt);
SuiteResult stabilization_suite(const SuiteOptions& opt);
SuiteResult surface_suite(const SuiteOptions& opt);
SuiteResult symmetry_suite(const SuiteOptions& opt);

}  // namespace einf::verify
