#include <gtest/gtest.h>

#include <numeric>

#include "folia/bounds.hpp"
#include "folia/errors.hpp"
#include "support.hpp"

using namespace folia;
using namespace folia::testing;

TEST(Bounds, LimitCycleTables) {
  const long t1[] = {1, 1, 4, 6, 11};
  for (int m = 2; m <= 6; ++m) EXPECT_EQ(thm1_bound(m).value, t1[m - 2]) << m;
  EXPECT_EQ(thm2_bound(2, true).value, 2);
  EXPECT_EQ(thm2_bound(3, true).value, 3);
  EXPECT_EQ(thm2_bound(2, false).value, 4);
  EXPECT_EQ(thm2_bound(3, false).value, 6);
  EXPECT_EQ(thm4_bound(2).value, 1);
  EXPECT_EQ(thm4_bound(3).value, 1);
  EXPECT_THROW(thm1_bound(0), DomainError);
}

TEST(Bounds, DegreeBounds) {
  EXPECT_EQ(nodal_degree_bound(1).value, 3);
  EXPECT_EQ(nondicritical_degree_bound(1).value, 3);
  for (int m = 1; m <= 10; ++m) {
    EXPECT_EQ(nodal_degree_bound(m).value, m + 2);
    EXPECT_EQ(nondicritical_degree_bound(m).value, m + 2);
  }
}

TEST(Bounds, Harnack) {
  EXPECT_EQ(harnack_bound(4, {}).value, 4);
  EXPECT_EQ(harnack_bound(3, {}).value, 1);
  const int node[] = {2};
  EXPECT_EQ(harnack_bound(3, node).value, 0);
  const int triple[] = {3, 3};
  auto r = harnack_bound(4, triple);
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(r.clamped);
}

TEST(Bounds, SplitMaximum) {
  const int part[] = {1, 1, 4};
  EXPECT_EQ(mk_value(4, part).value, 4);
  MkValue best = mk_argmax(4);
  EXPECT_EQ(best.k, 3);
  EXPECT_EQ(best.value, 4);
  const int wrong_sum[] = {1, 1, 1};
  EXPECT_THROW(mk_value(4, wrong_sum), DomainError);
  const int two_parts[] = {3, 3};
  EXPECT_THROW(mk_value(4, two_parts), DomainError);
}

TEST(Bounds, PropertyFormulaRelations) {
  Rng rng(51);
  for (int k = 0; k < kCases; ++k) {
    int m = static_cast<int>(rng.uniform(2, 200));
    ASSERT_EQ(thm4_bound(m).value, thm1_bound(m).value);
    ASSERT_GE(thm2_bound(m, false).value, thm2_bound(m, true).value);
    ASSERT_GE(thm2_bound(m, true).value, thm1_bound(m).value);
    // Harnack of the degree m + 2 curve minus the generic split
    long even = (m % 2 == 0);
    ASSERT_EQ(thm1_bound(m).value, long(m - 1) * (m - 2) / 2 + even);
    int n = static_cast<int>(rng.uniform(1, 30));
    std::vector<int> orders;
    for (int j = rng.uniform(0, 3); j > 0; --j) orders.push_back(static_cast<int>(rng.uniform(2, 4)));
    BoundReport h = harnack_bound(n, orders);
    ASSERT_GE(h.value, 0);
    ASSERT_LE(h.value, harnack_bound(n, {}).value);
  }
  record_cases(kCases);
}

TEST(Bounds, PropertyArgmaxDominatesRandomSplits) {
  Rng rng(52);
  for (int k = 0; k < kCases; ++k) {
    int m = static_cast<int>(rng.uniform(2, 14));
    int parts = static_cast<int>(rng.uniform(3, m + 2));
    std::vector<int> p(parts, 1);
    for (int left = m + 2 - parts; left > 0; --left) p[rng.uniform(0, parts - 1)]++;
    MkValue v = mk_value(m, p);
    MkValue best = mk_argmax(m);
    ASSERT_GE(best.value, v.value);
    ASSERT_EQ(std::accumulate(best.partition.begin(), best.partition.end(), 0), m + 2);
    ASSERT_LE(v.value, v.envelope);
  }
  record_cases(kCases);
}
