#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wreathdet/errors.hpp"

namespace wreathdet {

using Fields = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  Fields counterexample;  // first failing case; empty when passed
  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
  /// nullptr when every check passed.
  const CheckResult* first_failure() const;
};

/// alphadet, wreath, symfun, spherical.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, const Limits& limits = {});

}  // namespace wreathdet
