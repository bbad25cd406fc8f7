// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "warb/numeric.hpp"

using warb::compare_ratio;
using warb::exact_sum;

TEST(ExactSum, CancellationAndTies) {
  EXPECT_EQ(exact_sum(std::vector<double>{1e100, 1.0, -1e100}), 1.0);
  EXPECT_EQ(exact_sum(std::vector<double>{0.1, 0.2, 0.3}), 0.6);
  EXPECT_EQ(exact_sum(std::vector<double>{}), 0.0);
  // 1 + 2^-53 + 2^-53 rounds to 1 + 2^-52 only when summed exactly.
  EXPECT_EQ(exact_sum(std::vector<double>{1.0, 0x1p-53, 0x1p-53}), 1.0 + 0x1p-52);
  EXPECT_EQ(exact_sum(std::vector<double>{1.0, 0x1p-53}), 1.0);
}

TEST(ExactSum, OrderIndependent) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(0.1, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> xs(1 + trial % 40);
    for (auto& x : xs) x = dist(rng);
    const double ref = exact_sum(xs);
    for (int k = 0; k < 5; ++k) {
      std::shuffle(xs.begin(), xs.end(), rng);
      ASSERT_EQ(exact_sum(xs), ref);
    }
  }
}

TEST(CompareRatio, ExactCrossMultiplication) {
  EXPECT_EQ(compare_ratio(3.0, 2.0, 6.0, 4.0), std::strong_ordering::equal);
  EXPECT_EQ(compare_ratio(21.0, 6.0, 7.0, 2.0), std::strong_ordering::equal);
  EXPECT_EQ(compare_ratio(5.0, 4.0, 4.0, 3.0), std::strong_ordering::less);
  EXPECT_EQ(compare_ratio(2.0, 1.0, 3.0, 2.0), std::strong_ordering::greater);
  // 0.1 + 0.2 and 0.3 differ as doubles; the comparison sees the difference.
  EXPECT_EQ(compare_ratio(0.1 + 0.2, 1.0, 0.3, 1.0), std::strong_ordering::greater);
  // Products that round to the same double are separated by their tails.
  // 3a = 3 + 3*2^-52 rounds up to c = 3 + 2^-50, yet a/1 < c/3.
  const double a = 1.0 + 0x1p-52;
  const double c = 3.0 * a;
  ASSERT_EQ(c, 3.0 + 0x1p-50);
  EXPECT_EQ(compare_ratio(a, 1.0, c, 3.0), std::strong_ordering::less);
  EXPECT_EQ(compare_ratio(c, 3.0, a, 1.0), std::strong_ordering::greater);
}
