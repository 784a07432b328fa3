#pragma once

// The full verification suite: every check runs against one shared,
// immutable computation of the frieze, the continuant table and the
// classical oracle.

#include <functional>
#include <future>
#include <string>
#include <utility>
#include <vector>

#include "qfrieze/classical.hpp"
#include "qfrieze/continuant.hpp"
#include "qfrieze/frieze.hpp"
#include "qfrieze/report.hpp"
#include "qfrieze/seed.hpp"

namespace qfrieze {

inline const std::vector<std::string>& default_check_names() {
  static const std::vector<std::string> names = {
      "frieze-relations",  "periodicity",    "bijection",
      "mouth-consistency", "quasi-commutation", "left-recursion",
      "continuant-frieze-relation", "main-theorem", "specialization",
      "seed-periodicity"};
  return names;
}

// Literature-based checks, not implied by the frieze relations themselves.
inline const std::vector<std::string>& diagnostic_check_names() {
  static const std::vector<std::string> names = {"diagnostics"};
  return names;
}

inline bool is_known_check(const std::string& name) {
  for (const auto* list : {&default_check_names(), &diagnostic_check_names()})
    for (const auto& n : *list)
      if (n == name) return true;
  return false;
}

inline bool flips_row_and_column(const IntMatrix& before, const IntMatrix& after, int k) {
  for (int r = 0; r < before.size(); ++r)
    for (int c = 0; c < before.size(); ++c) {
      const int expected = (r == k - 1 || c == k - 1) ? -before.at(r, c) : before.at(r, c);
      if (after.at(r, c) != expected) return false;
    }
  return true;
}

// The sequence mu_n o ... o mu_1 from the initial seed, compared against
// the first column of the frieze of variables.
inline CheckResult verify_seed_mechanics(int n, const FriezeGrid& grid) {
  const char* name = "seed-periodicity";
  const QuantumSeed start = initial_seed(n);
  QuantumSeed seed = start;
  for (int k = 1; k <= n; ++k) {
    const std::string step = "k=" + std::to_string(k);
    for (int i = 1; i <= n; ++i)
      if (seed.b.entry(i, k) > 0) return CheckResult::fail(name, step + ": column of B^k has a positive entry");
    if (mutate(mutate(seed, k), k) != seed) return CheckResult::fail(name, step + ": mutation is not involutive");
    const QuantumSeed next = mutate(seed, k);
    if (!flips_row_and_column(seed.b.matrix(), next.b.matrix(), k)) {
      return CheckResult::fail(name, step + ": B changed beyond a sign flip");
    }
    if (!flips_row_and_column(seed.lambda.matrix(), next.lambda.matrix(), k)) {
      return CheckResult::fail(name, step + ": Lambda changed beyond a sign flip");
    }
    if (!next.is_compatible()) return CheckResult::fail(name, step + ": B^T Lambda != I");
    seed = next;
  }
  if (seed.b != start.b || seed.lambda != start.lambda) {
    return CheckResult::fail(name, "B, Lambda do not return after n mutations");
  }
  for (int i = 1; i <= n; ++i) {
    if (seed.cluster[static_cast<std::size_t>(i - 1)] != grid.at(i, 1)) {
      return CheckResult::fail(name, "cluster entry " + std::to_string(i) + " differs from f(" +
                                         std::to_string(i) + ",1)");
    }
  }
  return CheckResult::pass(name, std::to_string(n) + " mutations");
}

inline CheckResult verify_bijection(int n, const FriezeGrid& grid, const ClassicalFrieze& classical) {
  const char* name = "bijection";
  const GammaValues values = restrict_to_fundamental_domain(grid);
  const std::size_t expected = static_cast<std::size_t>(n) * (n + 3) / 2;
  const std::size_t distinct = count_distinct(values);
  if (values.size() != expected || distinct != expected) {
    return CheckResult::fail(name, std::to_string(distinct) + " distinct values on " +
                                       std::to_string(values.size()) + " points, expected " +
                                       std::to_string(expected));
  }
  std::vector<CommLaurent> seen;
  for (const auto& c : fundamental_domain(n)) {
    const CommLaurent& v = classical.at(c);
    for (const auto& s : seen)
      if (s == v) return CheckResult::fail(name, "classical values repeat at " + to_string(c));
    seen.push_back(v);
  }
  return CheckResult::pass(name, std::to_string(distinct) + " distinct variables");
}

inline CheckResult verify_mouth_consistency(int n, const FriezeGrid& grid) {
  std::vector<TorusElement> mouth;
  for (int j = 0; j <= n; ++j) mouth.push_back(grid.at(1, j));
  GammaValues rebuilt;
  try {
    rebuilt = frieze_from_mouth(n, mouth);
  } catch (const Error& e) {
    return CheckResult::fail("mouth-consistency", e.what());
  }
  for (const auto& c : fundamental_domain(n)) {
    if (rebuilt.at(c) != grid.at(c)) return CheckResult::fail("mouth-consistency", to_string(c));
  }
  return CheckResult::pass("mouth-consistency", std::to_string(rebuilt.size()) + " entries");
}

// Runs `names` (default suite when empty) for rank n over the given window.
// Checks run concurrently; the report keeps the requested order.
inline VerificationReport run_suite(int n, std::vector<std::string> names, int j_min, int j_max) {
  require_even_rank(n);
  if (names.empty()) names = default_check_names();
  for (const auto& name : names)
    if (!is_known_check(name)) throw InconsistentInput("unknown check '" + name + "'");

  const FriezeGrid grid = frieze_of_variables(n, j_min, j_max);
  const ContinuantTable table(n);
  const ClassicalFrieze classical = classical_frieze(n, j_min, j_max);

  auto run_one = [&](const std::string& name) -> CheckResult {
    try {
      if (name == "frieze-relations") return check_unimodular(grid);
      if (name == "periodicity") return check_periodicity(grid);
      if (name == "bijection") return verify_bijection(n, grid, classical);
      if (name == "mouth-consistency") return verify_mouth_consistency(n, grid);
      if (name == "quasi-commutation") return verify_quasi_commutation(table);
      if (name == "left-recursion") return verify_left_recursion(table);
      if (name == "continuant-frieze-relation") return verify_frieze_relation(table);
      if (name == "main-theorem") return verify_main_theorem(table, restrict_to_fundamental_domain(grid));
      if (name == "specialization") return cross_check(grid, classical);
      if (name == "seed-periodicity") return verify_seed_mechanics(n, grid);
      if (name == "diagnostics") return check_positivity(grid);
    } catch (const Error& e) {
      return CheckResult::fail(name, e.what());
    }
    return CheckResult::fail(name, "unknown check");
  };

  std::vector<std::future<CheckResult>> pending;
  pending.reserve(names.size());
  for (const auto& name : names) pending.push_back(std::async(std::launch::async, run_one, name));
  VerificationReport report;
  for (auto& f : pending) report.checks.push_back(f.get());
  return report;
}

inline VerificationReport run_suite(int n, std::vector<std::string> names = {}) {
  require_even_rank(n);
  const auto [lo, hi] = default_window(n);
  return run_suite(n, std::move(names), lo, hi);
}

}  // namespace qfrieze
