#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace aw {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;  // first failure, empty on success
  double seconds = 0;
  double limit_seconds = 0;
  bool within_limit() const { return seconds < limit_seconds; }
};

struct SuiteOptions {
  std::uint64_t seed = 20240607;
  std::set<int> only;  // empty: all criteria
};

constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const SuiteOptions& opts);
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

/// "criterion N: PASS | title | cases | seconds/limit".
std::string format_result(const CriterionResult& r);

}  // namespace aw
