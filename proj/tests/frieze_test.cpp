#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "qfrieze/frieze.hpp"
#include "test_support.hpp"

using namespace qfrieze;
using qfrieze::oracle::expand_words;
using qfrieze::oracle::Word;

namespace {

TorusElement X(std::initializer_list<int> u) { return TorusElement::monomial(ExponentVector(u)); }

// Basis forms of the n = 2 frieze of variables, columns 0..3.
struct FigureEntry {
  GridCoord at;
  TorusElement value;
};

std::vector<FigureEntry> n2_figure() {
  return {
      {{1, 0}, X({1, 0})},
      {{2, 0}, X({0, 1})},
      {{1, 1}, X({-1, 0}) + X({-1, 1})},
      {{2, 1}, X({-1, 0}) + X({-1, -1}) + X({0, -1})},
      {{1, 2}, X({0, -1}) + X({1, -1})},
      {{2, 2}, X({1, 0})},
      {{1, 3}, X({0, 1})},
  };
}

}  // namespace

TEST(frieze, figure_factored_forms_expand_to_basis_forms) {
  // X_1^{-1}(1 + q^{1/2} X_2)
  EXPECT_EQ(expand_words(2, {Word{0, {{1, -1}}}, Word{1, {{1, -1}, {2, 1}}}}), X({-1, 0}) + X({-1, 1}));
  // X_2^{-1} X_1^{-1} (X_1 + q^{1/2} + q X_2)
  EXPECT_EQ(expand_words(2, {Word{0, {{2, -1}, {1, -1}, {1, 1}}}, Word{1, {{2, -1}, {1, -1}}},
                             Word{2, {{2, -1}, {1, -1}, {2, 1}}}}),
            X({-1, 0}) + X({-1, -1}) + X({0, -1}));
  // (1 + q^{1/2} X_1) X_2^{-1}
  EXPECT_EQ(expand_words(2, {Word{0, {{2, -1}}}, Word{1, {{1, 1}, {2, -1}}}}), X({0, -1}) + X({1, -1}));
}

TEST(frieze, n2_frieze_of_variables_matches_figure) {
  const FriezeGrid g = frieze_of_variables(2, 0, 3);
  for (const auto& [at, value] : n2_figure()) EXPECT_EQ(g.at(at), value) << to_string(at);
  EXPECT_EQ(g.at(2, 3), g.at(1, 1));
}

TEST(frieze, phi_examples) {
  EXPECT_EQ(phi(2, {1, 0}), (GridCoord{2, 2}));
  EXPECT_EQ(phi(4, {1, 0}), (GridCoord{4, 2}));
  for (int n : {2, 4, 6})
    for (int i = 1; i <= n; ++i)
      for (int j = -5; j <= 5; ++j) {
        EXPECT_EQ(phi(n, phi(n, {i, j})), (GridCoord{i, j + n + 3}));
        EXPECT_EQ(phi_inverse(n, phi(n, {i, j})), (GridCoord{i, j}));
      }
}

TEST(frieze, fundamental_domain_sets) {
  const auto d2 = fundamental_domain(2);
  const std::set<GridCoord> expected2 = {{1, 0}, {2, 0}, {1, 1}, {2, 1}, {1, 2}};
  EXPECT_EQ(std::set<GridCoord>(d2.begin(), d2.end()), expected2);
  EXPECT_EQ(d2.size(), 5u);
  for (int n : {4, 6, 8}) {
    std::size_t by_rows = 0;
    for (int i = 1; i <= n; ++i) by_rows += static_cast<std::size_t>(n + 2 - i);
    EXPECT_EQ(fundamental_domain(n).size(), by_rows);
    EXPECT_EQ(by_rows, static_cast<std::size_t>(n * (n + 3) / 2));
  }
  EXPECT_THROW(fundamental_domain(5), OddRank);
}

TEST(frieze, every_vertex_has_a_representative_in_the_domain) {
  for (int n : {2, 4, 6}) {
    for (int i = 1; i <= n; ++i)
      for (int j = -(n + 3); j <= 2 * (n + 3); ++j) {
        GridCoord fwd{i, j}, back{i, j};
        bool found = false;
        for (int step = 0; step < 4 * (n + 3) && !found; ++step) {
          found = in_fundamental_domain(n, fwd) || in_fundamental_domain(n, back);
          fwd = phi(n, fwd);
          back = phi_inverse(n, back);
        }
        EXPECT_TRUE(found) << n << " " << to_string({i, j});
      }
  }
}

TEST(frieze, unimodular_rule_holds) {
  for (int n : {2, 4, 6}) EXPECT_TRUE(check_unimodular(frieze_of_variables(n)).passed) << n;
}

TEST(frieze, unimodular_check_reports_injected_fault) {
  const FriezeGrid g = frieze_of_variables(2, 0, 5);
  const FriezeGrid broken = g.with_entry({2, 3}, g.at(2, 3) + TorusElement::one(2));
  const CheckResult r = check_unimodular(broken);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.counterexample.has_value());
}

TEST(frieze, periodicity_examples) {
  EXPECT_TRUE(check_periodicity(frieze_of_variables(2, 0, 5)).passed);
  EXPECT_TRUE(check_periodicity(frieze_of_variables(4, -7, 14)).passed);
  EXPECT_TRUE(check_periodicity(frieze_of_variables(6)).passed);
}

TEST(frieze, periodicity_reports_perturbed_coordinate) {
  const FriezeGrid g = frieze_of_variables(2, 0, 5);
  const FriezeGrid broken = g.with_entry({1, 1}, g.at(1, 1) + TorusElement::one(2));
  const CheckResult r = check_periodicity(broken);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_NE(r.counterexample->find("f(1,1)"), std::string::npos);
}

TEST(frieze, periodicity_needs_a_pair) {
  EXPECT_THROW(check_periodicity(frieze_of_variables(4, 0, 1)), IndexOutOfRange);
}

TEST(frieze, overlapping_windows_agree) {
  for (int n : {2, 4}) {
    const FriezeGrid wide = frieze_of_variables(n);
    const FriezeGrid narrow = frieze_of_variables(n, -3, 4);
    for (const auto& [c, v] : narrow.entries()) EXPECT_EQ(wide.at(c), v);
    const FriezeGrid shifted = frieze_of_variables_window(n, 3, 7);
    for (const auto& [c, v] : shifted.entries()) EXPECT_EQ(wide.at(c), v);
  }
}

TEST(frieze, window_guards) {
  EXPECT_THROW(frieze_of_variables(2, 1, 3), IndexOutOfRange);
  EXPECT_THROW(frieze_of_variables(3, 0, 3), OddRank);
  EXPECT_THROW(frieze_of_variables_window(2, 4, 3), IndexOutOfRange);
  EXPECT_THROW(frieze_of_variables(2, 0, 3).at(1, 4), IndexOutOfRange);
  EXPECT_EQ(frieze_of_variables(2, 0, 3).at(0, 2), TorusElement::one(2));
  EXPECT_EQ(frieze_of_variables(2, 0, 3).at(3, 2), TorusElement::one(2));
}

TEST(frieze, mouth_reconstruction_matches_generation) {
  for (int n : {2, 4, 6}) {
    const FriezeGrid g = frieze_of_variables(n, 0, n + 1);
    std::vector<TorusElement> mouth;
    for (int j = 0; j <= n; ++j) mouth.push_back(g.at(1, j));
    const GammaValues rebuilt = frieze_from_mouth(n, mouth);
    EXPECT_EQ(rebuilt.size(), static_cast<std::size_t>(n * (n + 3) / 2));
    for (const auto& [c, v] : rebuilt) EXPECT_EQ(v, g.at(c)) << to_string(c);
  }
}

TEST(frieze, mouth_n2_second_entry) {
  const std::vector<TorusElement> mouth = {X({1, 0}), X({-1, 0}) + X({-1, 1}), X({0, -1}) + X({1, -1})};
  EXPECT_EQ(frieze_from_mouth(2, mouth).at({2, 0}), X({0, 1}));
}

TEST(frieze, corrupted_mouth_is_rejected) {
  for (int n : {2, 4}) {
    const FriezeGrid g = frieze_of_variables(n, 0, n + 1);
    std::vector<TorusElement> mouth;
    for (int j = 0; j <= n; ++j) mouth.push_back(g.at(1, j));
    mouth[1] = TorusElement::zero(n);
    EXPECT_THROW(frieze_from_mouth(n, mouth), Error) << n;
  }
  EXPECT_THROW(frieze_from_mouth(2, std::vector<TorusElement>{X({1, 0})}), IndexOutOfRange);
}

TEST(frieze, cluster_variables_n2) {
  const GammaValues v = cluster_variables(2);
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(count_distinct(v), 5u);
  for (const auto& [at, value] : n2_figure()) {
    if (in_fundamental_domain(2, at)) {
      EXPECT_EQ(v.at(at), value);
    }
  }
}

TEST(frieze, cluster_variables_counts) {
  EXPECT_EQ(count_distinct(cluster_variables(4)), 14u);
  EXPECT_EQ(count_distinct(cluster_variables(6)), 27u);
  EXPECT_THROW(cluster_variables(3), OddRank);
}

TEST(frieze, positivity_diagnostics) {
  // Literature-based: not a consequence of the frieze relations alone.
  for (int n : {2, 4, 6}) EXPECT_TRUE(check_positivity(frieze_of_variables(n)).passed) << n;
  const FriezeGrid g = frieze_of_variables(2, 0, 3);
  EXPECT_FALSE(check_positivity(g.with_entry({1, 1}, -g.at(1, 1))).passed);
  EXPECT_FALSE(check_positivity(g.with_entry({1, 1}, g.at(1, 1).shifted(1))).passed);
}
