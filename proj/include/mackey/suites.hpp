#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mackey/group.hpp"

namespace mackey {

struct SuiteConfig {
  std::vector<GroupPtr> corpus;
  int jobs = 1;
  std::uint64_t seed = 1;
  int word_length = 3;   ///< words up to this length are enumerated exhaustively
  int sampled_words = 40;  ///< seeded random words of length word_length + 1
};

/// {1, C2, C3, C2xC2, C4, S3}
std::vector<GroupPtr> default_corpus();

struct CheckResult {
  std::string name;
  long long instances = 0;
  long long failures = 0;
  std::string counterexample;  ///< first failing instance in enumeration order
  bool pass() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool pass() const;
  CheckResult const& check(std::string const& name) const;  ///< TypeError if absent
};

/// presentation, biset-relations, realization, transport, fused, spannable
std::vector<std::string> const& suite_names();

/// Instances run on up to cfg.jobs threads; results are aggregated in
/// enumeration order, so reports do not depend on the thread count. Library
/// errors other than check failures (budget, bound) are rethrown.
SuiteReport run_suite(std::string const& name, SuiteConfig const& cfg);

}  // namespace mackey
