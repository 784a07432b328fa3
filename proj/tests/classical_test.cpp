#include "gtest/gtest.h"
#include "qfrieze/classical.hpp"
#include "test_support.hpp"

using namespace qfrieze;

namespace {

CommLaurent x(int n, std::initializer_list<int> e, long long c = 1) {
  CommLaurent p(n);
  p.add_term(std::vector<int>(e), c);
  return p;
}

}  // namespace

TEST(classical, specialize_examples) {
  const TorusElement f11 = TorusElement::monomial(ExponentVector{-1, 0}) + TorusElement::monomial(ExponentVector{-1, 1});
  EXPECT_EQ(specialize(f11), x(2, {-1, 0}) + x(2, {-1, 1}));
  EXPECT_EQ(specialize(TorusElement::monomial(ExponentVector{1, 0}, NuPoly::nu(1))), x(2, {1, 0}));
  const TorusElement cancels = TorusElement::monomial(ExponentVector{1, 0}, NuPoly({{1, 1}, {-1, -1}}));
  EXPECT_TRUE(specialize(cancels).is_zero());
}

TEST(classical, specialization_is_multiplicative) {
  oracle::Generator gen(47);
  for (int trial = 0; trial < 300; ++trial) {
    const LambdaForm form = gen.form(3);
    const TorusElement a = gen.element(3), b = gen.element(3);
    EXPECT_EQ(specialize(multiply(form, a, b)), specialize(a) * specialize(b));
  }
}

TEST(classical, n2_frieze_entries) {
  const ClassicalFrieze f = classical_frieze(2, 0, 3);
  EXPECT_EQ(f.at({1, 1}), x(2, {-1, 0}) + x(2, {-1, 1}));
  EXPECT_EQ(f.at({2, 1}), x(2, {-1, 0}) + x(2, {-1, -1}) + x(2, {0, -1}));
  EXPECT_EQ(f.at({2, 2}), x(2, {1, 0}));
  EXPECT_EQ(f.at({1, 3}), x(2, {0, 1}));
}

TEST(classical, odd_rank_is_allowed) {
  const ClassicalFrieze f = classical_frieze(3, -6, 12);
  // phi-periodic with period n + 3 after two steps.
  for (int i = 1; i <= 3; ++i)
    for (int j = -6; j + 6 <= 12; ++j) EXPECT_EQ(f.at({i, j}), f.at({i, j + 6}));
  EXPECT_THROW(classical_frieze(1, 0, 2), InvalidRank);
}

TEST(classical, periodic_distinct_and_positive) {
  for (int n : {2, 4, 6}) {
    const auto [lo, hi] = default_window(n);
    const ClassicalFrieze f = classical_frieze(n, lo, hi);
    for (const auto& [c, v] : f) {
      EXPECT_TRUE(v.has_positive_coefficients());
      const GridCoord image = phi(n, c);
      if (image.j <= hi) {
        EXPECT_EQ(f.at(image), v);
      }
    }
    std::vector<CommLaurent> seen;
    for (const auto& c : fundamental_domain(n)) {
      for (const auto& s : seen) EXPECT_NE(s, f.at(c));
      seen.push_back(f.at(c));
    }
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(n * (n + 3) / 2));
  }
}

TEST(classical, divide_exact) {
  const CommLaurent d = x(2, {0, 0}) + x(2, {1, 0});
  const CommLaurent y = x(2, {-1, 2}, 3) - x(2, {0, -1});
  EXPECT_EQ(divide_exact(d * y, d), y);
  EXPECT_THROW(divide_exact(x(2, {0, 0}), d), NotDivisible);
  EXPECT_THROW(divide_exact(x(2, {0, 0}), CommLaurent(2)), NotDivisible);
}

TEST(classical, cross_check_passes) {
  EXPECT_TRUE(cross_check(2, 0, 5).passed);
  EXPECT_TRUE(cross_check(4, -7, 14).passed);
}

TEST(classical, cross_check_reports_mismatch) {
  const FriezeGrid g = frieze_of_variables(2, 0, 5);
  // Multiplying one term's coefficient by (nu - 1) kills it under q -> 1.
  const TorusElement& v = g.at(1, 1);
  TorusElement perturbed(2);
  bool first = true;
  for (const auto& [u, c] : v.terms()) {
    perturbed.add_term(u, first ? c * NuPoly({{1, 1}, {0, -1}}) : c);
    first = false;
  }
  const CheckResult r = cross_check(g.with_entry({1, 1}, perturbed), classical_frieze(2, 0, 5));
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.counterexample.value_or("").find("f(1,1)"), std::string::npos);
}
