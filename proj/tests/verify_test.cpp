#include "mahonian/verify.hpp"

#include <string>

#include "gtest/gtest.h"

namespace mahonian {
namespace {

const CheckResult& Find(const VerifyReport& r, Check c) {
  for (const auto& x : r.results)
    if (x.check == c) return x;
  throw std::logic_error("missing check");
}

TEST(VerifyTest, AllChecksPassThroughSeven) {
  VerifyOptions opts;
  opts.n_max = 7;
  opts.workers = 4;
  const VerifyReport report = verify(opts);
  ASSERT_EQ(report.results.size(), std::size(kAllChecks));
  for (const auto& r : report.results) {
    EXPECT_TRUE(r.passed()) << to_string(r.check) << ": "
                            << (r.failure ? r.failure->input : "");
    EXPECT_GT(r.cases, 0u);
  }
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.first_failure(), nullptr);
}

TEST(VerifyTest, CaseCountsAtFive) {
  VerifyOptions opts;
  opts.n_max = 5;
  const VerifyReport report = verify(opts);
  // 1+1+2+6+24+120 = 154 tables and as many words, per codec.
  EXPECT_EQ(Find(report, Check::kRoundTrip).cases, 3u * 2 * 154);
  EXPECT_EQ(Find(report, Check::kTableStats).cases, 4u * 154);
  EXPECT_EQ(Find(report, Check::kInverse).cases, 154u);
  // Words of length j < 5, each with j+1 deltas.
  EXPECT_EQ(Find(report, Check::kSlots).cases, 1u + 2 + 2 * 3 + 6 * 4 + 24 * 5);
}

TEST(VerifyTest, ZeroLengthOnly) {
  VerifyOptions opts;
  opts.n_max = 0;
  const VerifyReport report = verify(opts);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(Find(report, Check::kRoundTrip).cases, 6u);
  EXPECT_EQ(Find(report, Check::kSlots).cases, 0u);
}

TEST(VerifyTest, InjectedFaultIsCaught) {
  VerifyOptions opts;
  opts.n_max = 4;
  opts.codecs = codecs_with_maj_fault();
  const VerifyReport report = verify(opts);
  EXPECT_FALSE(report.passed());
  const CheckResult& rt = Find(report, Check::kRoundTrip);
  ASSERT_FALSE(rt.passed());
  EXPECT_EQ(rt.failure->n, 2u);
  EXPECT_EQ(rt.failure->input, "maj (0,1)");
  EXPECT_EQ(rt.failure->expected, "(0,1)");
  EXPECT_EQ(rt.failure->actual, "(0,0)");
  EXPECT_FALSE(Find(report, Check::kTableStats).passed());
  // Checks that do not touch decode_maj are unaffected.
  EXPECT_TRUE(Find(report, Check::kInverse).passed());
  EXPECT_TRUE(Find(report, Check::kSymmetry).passed());
  EXPECT_EQ(report.first_failure()->check, Check::kRoundTrip);
}

TEST(VerifyTest, BrokenSlotRuleIsCaught) {
  VerifyOptions opts;
  opts.n_max = 4;
  opts.checks = {Check::kSlots};
  opts.codecs.maj_slot = [](const Permutation& w, StatValue) {
    return InsertionOutcome{w.size(), 0};
  };
  const VerifyReport report = verify(opts);
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(report.results[0].failure->n, 2u);
}

TEST(VerifyTest, CheckNames) {
  for (Check c : kAllChecks) EXPECT_EQ(parse_check(to_string(c)), c);
  EXPECT_FALSE(parse_check("everything").has_value());
}

TEST(VerifyTest, CapIsEnforced) {
  VerifyOptions opts;
  opts.n_max = 11;
  EXPECT_THROW(verify(opts), CapExceeded);
}

}  // namespace
}  // namespace mahonian
