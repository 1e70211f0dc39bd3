#include <gtest/gtest.h>

#include <cmath>

#include "hfw/theorems.hpp"

using namespace hfw;

namespace {

bool is_square(std::int64_t n) {
  if (n < 0) return false;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

// Whether n is a sum of k squares of positive integers.
bool sum_of_positive_squares(std::int64_t n, int k) {
  if (k == 0) return n == 0;
  for (std::int64_t x = 1; x * x <= n; ++x) {
    if (sum_of_positive_squares(n - x * x, k - 1)) return true;
  }
  return false;
}

}  // namespace

TEST(Theorems, OrderingCountsOverQ) {
  for (const auto& t : {construct::QSubgroup::positives(), construct::QSubgroup::positive_p_units(2),
                        construct::QSubgroup::positive_p_units(3)}) {
    const thm::OrderingCount c = thm::theorem_cr_check(t);
    EXPECT_TRUE(c.equal()) << c.subgroup;
    EXPECT_EQ(c.factor_orderings, 1U) << c.subgroup;
    EXPECT_EQ(c.field_orderings, 1U);
  }
  EXPECT_THROW(thm::theorem_cr_check(construct::QSubgroup::squares()), std::invalid_argument);
}

TEST(Theorems, OrderingCountsOverFiniteFields) {
  for (std::int64_t p : {5, 7, 13}) {
    const thm::OrderingCount c = thm::theorem_cr_check(p, construct::squares_subgroup(p));
    EXPECT_TRUE(c.equal());
    EXPECT_EQ(c.factor_orderings, 0U) << p;
  }
  const thm::OrderingCount c = thm::theorem_cr_check(13, construct::SubgroupSpec::from_generators(13, {3}));
  EXPECT_TRUE(c.equal());
  EXPECT_EQ(c.field_orderings, 0U);
}

TEST(Theorems, TwoSquaresAgreesWithSearch) {
  for (std::int64_t n = 1; n <= 400; ++n) {
    std::int64_t x = 0, y = 0;
    const bool found = thm::two_squares(n, x, y);
    EXPECT_EQ(found, sum_of_positive_squares(n, 2)) << n;
    if (found) {
      EXPECT_GT(x, 0);
      EXPECT_GT(y, 0);
      EXPECT_EQ(x * x + y * y, n);
    }
  }
}

TEST(Theorems, SumsOfTwoSquaresClosedUnderProducts) {
  const thm::SquaresProductCheck c = thm::q_squares_I2_closure(100);
  EXPECT_EQ(c.counterexamples, 0U);
  EXPECT_GT(c.pairs, 100U);
  ASSERT_FALSE(c.samples.empty());
  for (const auto& w : c.samples) {
    const std::int64_t sa = w.x1 * w.x1 + w.x2 * w.x2, sb = w.y1 * w.y1 + w.y2 * w.y2;
    // Each sum represents the class of its squarefree label.
    EXPECT_TRUE(is_square(sa * w.a)) << w.a;
    EXPECT_TRUE(is_square(sb * w.b)) << w.b;
    EXPECT_NE(w.u, 0);
    EXPECT_NE(w.v, 0);
    EXPECT_TRUE(is_square((w.u * w.u + w.v * w.v) * w.a * w.b)) << w.a << " " << w.b;
  }
}

TEST(Theorems, SevenNeedsFourSquares) {
  const thm::SevenCertificate s = thm::q_squares_seven(100);
  ASSERT_EQ(s.four_squares.size(), 4U);
  std::int64_t sum = 0;
  for (std::int64_t x : s.four_squares) {
    EXPECT_NE(x, 0);
    sum += x * x;
  }
  EXPECT_EQ(sum, 7);
  EXPECT_FALSE(s.in_I2);
  EXPECT_FALSE(s.in_I3);
  EXPECT_TRUE(s.in_I4);
  EXPECT_TRUE(s.bounded_search_agrees);
  // No 7 k^2 is a sum of two or three positive squares.
  for (std::int64_t k = 1; k <= 12; ++k) {
    EXPECT_FALSE(sum_of_positive_squares(7 * k * k, 2)) << k;
    EXPECT_FALSE(sum_of_positive_squares(7 * k * k, 3)) << k;
  }
}

TEST(Theorems, QModSquaresIsArchimedean) {
  const thm::ArchimedeanCheck a = thm::q_squares_archimedean(100);
  EXPECT_GT(a.classes, 100U);
  EXPECT_EQ(a.failures, 0U);
  EXPECT_TRUE(a.i4_is_positive_cone);
}
