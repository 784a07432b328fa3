#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qfrieze {

struct CheckResult {
  std::string name;
  bool passed = true;
  // First failing instance, human readable.
  std::optional<std::string> counterexample;
  // Free-form summary ("27 distinct values", "literature-based diagnostic").
  std::string detail;

  static CheckResult pass(std::string name, std::string detail = {}) {
    return {std::move(name), true, std::nullopt, std::move(detail)};
  }
  static CheckResult fail(std::string name, std::string counterexample, std::string detail = {}) {
    return {std::move(name), false, std::move(counterexample), std::move(detail)};
  }

  explicit operator bool() const { return passed; }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  std::size_t pass_count() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
  }
  std::size_t fail_count() const { return checks.size() - pass_count(); }
  bool all_passed() const { return fail_count() == 0; }
};

}  // namespace qfrieze
