#include "mahonian/distributions.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace mahonian {
namespace {

using Counts = std::vector<StatValue>;

TEST(MahonianNumbersTest, SmallCases) {
  EXPECT_EQ(mahonian_numbers(0).counts, (Counts{1}));
  EXPECT_EQ(mahonian_numbers(1).counts, (Counts{1}));
  EXPECT_EQ(mahonian_numbers(2).counts, (Counts{1, 1}));
  EXPECT_EQ(mahonian_numbers(3).counts, (Counts{1, 2, 2, 1}));
  EXPECT_EQ(mahonian_numbers(4).counts, (Counts{1, 3, 5, 6, 5, 3, 1}));
  EXPECT_EQ(mahonian_numbers(5).counts,
            (Counts{1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1}));
  EXPECT_EQ(mahonian_numbers(3).n, 3u);
}

TEST(MahonianNumbersTest, MatchesTableEnumeration) {
  for (std::size_t n = 0; n <= 8; ++n)
    EXPECT_EQ(mahonian_numbers(n).counts, oracle::table_sum_counts(n));
  // (0,1,0,3,3) is one of the tables counted in b(5, 7).
  EXPECT_EQ(mahonian_numbers(5).counts[7], 15u);
}

TEST(MahonianNumbersTest, RecurrencePalindromeAndTotal) {
  for (std::size_t n = 0; n <= 20; ++n) {
    const DistributionVector d = mahonian_numbers(n);
    const std::size_t top = static_cast<std::size_t>(max_stat(n));
    ASSERT_EQ(d.counts.size(), top + 1);
    EXPECT_EQ(d.total(), factorial(n));
    EXPECT_EQ(d.counts.front(), 1u);
    EXPECT_EQ(d.counts.back(), 1u);
    for (std::size_t k = 0; k <= top; ++k)
      EXPECT_EQ(d.counts[k], d.counts[top - k]);
    if (n <= 12) {
      EXPECT_EQ(d.counts, oracle::mahonian_by_recurrence(n)) << "n=" << n;
    }
  }
}

TEST(MahonianNumbersTest, CapExceeded) {
  EXPECT_THROW(mahonian_numbers(21), CapExceeded);
  EXPECT_THROW(mahonian_numbers(6, 5), CapExceeded);
  EXPECT_THROW(mahonian_numbers(21, 30), CapExceeded);
}

TEST(StatDistributionTest, Examples) {
  EXPECT_EQ(stat_distribution(3, Statistic::kInv).counts, (Counts{1, 2, 2, 1}));
  EXPECT_EQ(stat_distribution(3, Statistic::kMaj).counts, (Counts{1, 2, 2, 1}));
  for (std::size_t n : {0u, 1u}) {
    EXPECT_EQ(stat_distribution(n, Statistic::kInv).counts, (Counts{1}));
    EXPECT_EQ(stat_distribution(n, Statistic::kMaj).counts, (Counts{1}));
  }
  EXPECT_THROW(stat_distribution(11, Statistic::kInv), CapExceeded);
}

TEST(StatDistributionTest, Equidistribution) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const DistributionVector b = mahonian_numbers(n);
    EXPECT_EQ(stat_distribution(n, Statistic::kInv), b) << "n=" << n;
    EXPECT_EQ(stat_distribution(n, Statistic::kMaj), b) << "n=" << n;
  }
}

TEST(StatDistributionTest, IndependentOfWorkerCount) {
  for (std::size_t workers : {2u, 3u, 8u, 16u}) {
    for (std::size_t n : {0u, 1u, 5u, 7u}) {
      EXPECT_EQ(stat_distribution(n, Statistic::kMaj, {10, workers}),
                stat_distribution(n, Statistic::kMaj));
      EXPECT_EQ(joint_distribution(n, {10, workers}), joint_distribution(n));
    }
  }
}

TEST(JointDistributionTest, Examples) {
  const JointMatrix m0 = joint_distribution(0);
  EXPECT_EQ(m0.dim(), 1u);
  EXPECT_EQ(m0.at(0, 0), 1u);

  const JointMatrix m2 = joint_distribution(2);
  ASSERT_EQ(m2.dim(), 2u);
  EXPECT_EQ(m2.at(0, 0), 1u);
  EXPECT_EQ(m2.at(1, 1), 1u);
  EXPECT_EQ(m2.at(0, 1), 0u);
  EXPECT_EQ(m2.at(1, 0), 0u);

  const JointMatrix m3 = joint_distribution(3);
  ASSERT_EQ(m3.dim(), 4u);
  EXPECT_EQ(m3.total(), 6u);
  EXPECT_EQ(m3.row_sums().counts, (Counts{1, 2, 2, 1}));
  // 021 -> (1,2), 201 -> (2,1)
  EXPECT_EQ(m3.at(1, 2), 1u);
  EXPECT_EQ(m3.at(2, 1), 1u);
}

TEST(JointDistributionTest, MatchesOracleAndMarginals) {
  for (std::size_t n = 0; n <= 7; ++n) {
    const JointMatrix m = joint_distribution(n);
    const auto expected = oracle::joint_counts(n);
    StatValue seen = 0;
    for (std::size_t k = 0; k < m.dim(); ++k) {
      for (std::size_t kp = 0; kp < m.dim(); ++kp) {
        const auto it = expected.find({k, kp});
        const StatValue want = it == expected.end() ? 0 : it->second;
        ASSERT_EQ(m.at(k, kp), want) << "n=" << n << " cell " << k << "," << kp;
        seen += want;
      }
    }
    EXPECT_EQ(seen, factorial(n));
    EXPECT_EQ(m.total(), factorial(n));
    EXPECT_EQ(m.row_sums(), mahonian_numbers(n));
    EXPECT_EQ(m.column_sums(), mahonian_numbers(n));
  }
}

TEST(SymmetryTest, JointDistributionIsSymmetric) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const SymmetryReport r = check_symmetry(joint_distribution(n, {10, 4}));
    EXPECT_TRUE(r.symmetric()) << "n=" << n;
  }
  EXPECT_EQ(check_symmetry(joint_distribution(6)).pairs_checked, 15u * 16 / 2);
}

TEST(SymmetryTest, ReportsPerturbedCell) {
  JointMatrix m = joint_distribution(4);
  ++m.at(1, 3);
  const SymmetryReport r = check_symmetry(m);
  ASSERT_FALSE(r.symmetric());
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0], (SymmetryViolation{1, 3, 2, 1}));

  ++m.at(5, 2);
  EXPECT_EQ(check_symmetry(m).violations.size(), 2u);
}

TEST(TableStatJointTest, EqualsPermutationJoint) {
  const JointMatrix t0 = table_stat_joint(0);
  EXPECT_EQ(t0.at(0, 0), 1u);
  for (std::size_t n = 0; n <= 7; ++n)
    EXPECT_EQ(table_stat_joint(n), joint_distribution(n)) << "n=" << n;
  EXPECT_THROW(table_stat_joint(11), CapExceeded);
}

TEST(JointMatrixTest, AccumulateRejectsMismatch) {
  JointMatrix a(3);
  EXPECT_THROW(a += JointMatrix(4), std::invalid_argument);
  EXPECT_THROW(a.at(4, 0), std::out_of_range);
}

}  // namespace
}  // namespace mahonian
