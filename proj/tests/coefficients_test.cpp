#include "gtest/gtest.h"
#include "qfrieze/coefficients.hpp"
#include "test_support.hpp"

using namespace qfrieze;

TEST(coefficients, multiply_examples) {
  EXPECT_EQ(NuPoly({{0, 1}, {2, 1}}) * NuPoly::nu(-1), NuPoly({{-1, 1}, {1, 1}}));
  EXPECT_TRUE((NuPoly(0) * NuPoly({{1, 1}, {0, 3}})).is_zero());
  EXPECT_EQ(NuPoly({{0, 1}, {1, 1}}) * NuPoly({{0, 1}, {1, -1}}), NuPoly({{0, 1}, {2, -1}}));
}

TEST(coefficients, product_term_count_bound) {
  oracle::Generator gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const NuPoly a = gen.nupoly(4), b = gen.nupoly(4);
    EXPECT_LE((a * b).size(), a.size() * b.size());
  }
}

TEST(coefficients, exact_divide_examples) {
  EXPECT_EQ(exact_divide(NuPoly({{1, 1}, {3, 1}}), NuPoly::nu(1)), NuPoly({{0, 1}, {2, 1}}));
  EXPECT_EQ(exact_divide(NuPoly({{2, 1}, {0, -1}}), NuPoly({{1, 1}, {0, -1}})), NuPoly({{1, 1}, {0, 1}}));
  EXPECT_THROW(exact_divide(NuPoly({{1, 1}, {0, 1}}), NuPoly(2)), NotDivisible);
}

TEST(coefficients, exact_divide_rejects_remainders) {
  EXPECT_THROW(exact_divide(NuPoly({{0, 1}, {1, 1}}), NuPoly({{0, 1}, {1, -1}})), NotDivisible);
  EXPECT_THROW(exact_divide(NuPoly(1), NuPoly()), NotDivisible);
  EXPECT_TRUE(exact_divide(NuPoly(), NuPoly({{3, 5}})).is_zero());
}

TEST(coefficients, specialize_examples) {
  EXPECT_EQ(specialize_nu_one(NuPoly({{0, 1}, {1, 1}, {2, 1}})), 3);
  EXPECT_EQ(specialize_nu_one(NuPoly({{-1, 1}, {1, -1}})), 0);
  EXPECT_EQ(specialize_nu_one(NuPoly()), 0);
}

TEST(coefficients, ring_axioms) {
  oracle::Generator gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const NuPoly a = gen.nupoly(), b = gen.nupoly(), c = gen.nupoly();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(coefficients, exact_divide_round_trip) {
  oracle::Generator gen(13);
  for (int trial = 0; trial < 500; ++trial) {
    const NuPoly d = gen.nonzero_nupoly(4), y = gen.nupoly(4);
    EXPECT_EQ(exact_divide(d * y, d), y);
  }
}

TEST(coefficients, specialization_is_a_homomorphism) {
  oracle::Generator gen(17);
  for (int trial = 0; trial < 500; ++trial) {
    const NuPoly a = gen.nupoly(), b = gen.nupoly();
    EXPECT_EQ(specialize_nu_one(a * b), specialize_nu_one(a) * specialize_nu_one(b));
    EXPECT_EQ(specialize_nu_one(a + b), specialize_nu_one(a) + specialize_nu_one(b));
  }
}

TEST(coefficients, no_overflow_on_large_coefficients) {
  NuPoly big = NuPoly({{0, 1}, {1, 1}});
  for (int k = 0; k < 7; ++k) big = big * big;  // (1+nu)^128
  EXPECT_EQ(big.coefficient(64), Integer("23951146041928082866135587776380551750"));  // C(128,64)
  EXPECT_EQ(specialize_nu_one(big), Integer(1) << 128);
  EXPECT_EQ(exact_divide(big, NuPoly({{0, 1}, {1, 1}})).coefficient(64), 
            Integer("11975573020964041433067793888190275875"));  // C(127,64)
}

TEST(coefficients, bar_and_palindromes) {
  EXPECT_TRUE(NuPoly({{-1, 2}, {1, 2}}).is_palindromic());
  EXPECT_FALSE(NuPoly({{0, 1}, {1, 1}}).is_palindromic());
  EXPECT_EQ(NuPoly({{3, 4}}).bar(), NuPoly({{-3, 4}}));
}
