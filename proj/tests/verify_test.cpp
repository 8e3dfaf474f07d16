#include "fermatlab/verify.hpp"

#include <gtest/gtest.h>

#include <chrono>

using namespace fermatlab;

TEST(VerifyExample, AllPrintedValuesMatch) {
  const auto t0 = std::chrono::steady_clock::now();
  const VerifyReport report = verify_example();
  const auto elapsed = std::chrono::steady_clock::now() - t0;
  EXPECT_TRUE(report.passed());
  EXPECT_LT(elapsed, std::chrono::seconds(1));
  ASSERT_GE(report.entries.size(), 8u);
  for (const auto& e : report.entries) EXPECT_EQ(e.expected, e.actual) << e.name;
  EXPECT_EQ(report.entries[0].name, "X0");
  EXPECT_EQ(report.entries[0].actual, "4975758028647949436694003969298664117473");
}

TEST(VerifyExample, ReportFailsOnAnyMismatch) {
  VerifyReport report = verify_example();
  report.entries[5].actual.back() ^= 1;
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(VerifyReport{}.passed());
}
