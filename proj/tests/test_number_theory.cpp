#include <gtest/gtest.h>

#include <cmath>

#include "hfw/number_theory.hpp"

using namespace hfw::nt;

namespace {

// Brute force: n is a sum of `count` squares of integers.
bool brute_sum_of_squares(std::int64_t n, int count) {
  if (n < 0) return false;
  if (count == 0) return n == 0;
  for (std::int64_t x = 0; x * x <= n; ++x) {
    if (brute_sum_of_squares(n - x * x, count - 1)) return true;
  }
  return false;
}

bool brute_squarefree(std::int64_t n) {
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

}  // namespace

TEST(NumberTheory, FactorizeMultipliesBack) {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    std::int64_t prod = 1;
    for (const auto& [q, e] : factorize(n)) {
      EXPECT_TRUE(is_prime(q));
      for (int i = 0; i < e; ++i) prod *= q;
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(NumberTheory, ValuationOfRationals) {
  EXPECT_EQ(valuation(Rational(12, 5), 2), 2);
  EXPECT_EQ(valuation(Rational(5, 12), 2), -2);
  EXPECT_EQ(valuation(Rational(5, 12), 3), -1);
  EXPECT_EQ(valuation(Rational(-7, 1), 7), 1);
  EXPECT_THROW(valuation(std::int64_t{0}, 2), std::domain_error);
}

TEST(NumberTheory, SquarefreeClassIsInvariantUnderSquares) {
  for (std::int64_t n = -30; n <= 30; ++n) {
    if (n == 0) continue;
    const std::int64_t s = squarefree_class(Rational(n));
    EXPECT_TRUE(brute_squarefree(std::llabs(s)));
    for (std::int64_t a = 1; a <= 6; ++a) {
      for (std::int64_t b = 1; b <= 6; ++b) {
        EXPECT_EQ(squarefree_class(Rational(n * a * a, b * b)), s);
      }
    }
  }
  EXPECT_THROW(squarefree_class(Rational(0)), std::domain_error);
}

// For a squarefree class s > 0, s is a sum of k squares in Q iff some s m^2 is
// a sum of k integer squares; m up to 4 suffices for the classes tested.
TEST(NumberTheory, SquareClassCriteriaMatchBruteForce) {
  for (std::int64_t s = 1; s <= 200; ++s) {
    if (!brute_squarefree(s)) continue;
    bool two = false, three = false, four = false;
    for (std::int64_t m = 1; m <= 4; ++m) {
      two = two || brute_sum_of_squares(s * m * m, 2);
      three = three || brute_sum_of_squares(s * m * m, 3);
      four = four || brute_sum_of_squares(s * m * m, 4);
    }
    EXPECT_EQ(sum_of_two_squares_class(s), two) << s;
    EXPECT_EQ(sum_of_three_squares_class(s), three) << s;
    EXPECT_EQ(sum_of_four_squares_class(s), four) << s;
  }
  EXPECT_FALSE(sum_of_two_squares_class(-1));
  EXPECT_FALSE(sum_of_four_squares_class(-5));
}

TEST(NumberTheory, SquaresLength) {
  EXPECT_EQ(squares_length(1), 1);
  EXPECT_EQ(squares_length(2), 2);
  EXPECT_EQ(squares_length(3), 3);
  EXPECT_EQ(squares_length(7), 4);
  EXPECT_THROW(squares_length(-1), std::domain_error);
}
