#include <gtest/gtest.h>

#include "bifree/selfcheck.hpp"

TEST(Selfcheck, DefaultRunPasses) {
  const bifree::SelfcheckOptions options;
  const auto results = bifree::run_selfcheck(options);
  ASSERT_EQ(results.size(), 5u);
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    EXPECT_EQ(r.cases, options.size);
  }
}

TEST(Selfcheck, InjectedFaultIsCaught) {
  bifree::SelfcheckOptions options;
  options.size = 2;
  options.inject_fault = true;
  const auto results = bifree::run_selfcheck(options);
  EXPECT_FALSE(bifree::all_passed(results));
  EXPECT_EQ(results[0].name, "additivity");
  EXPECT_FALSE(results[0].passed);
}

TEST(Selfcheck, ReportIsReproducible) {
  bifree::SelfcheckOptions options;
  options.seed = 99;
  options.size = 4;
  const std::string first = bifree::format_report(options, bifree::run_selfcheck(options));
  const std::string second = bifree::format_report(options, bifree::run_selfcheck(options));
  EXPECT_EQ(first, second);
  EXPECT_NE(first.find("seed=99 size=4"), std::string::npos);
}

TEST(Selfcheck, DifferentSeedsStillPass) {
  for (std::uint64_t seed : {1u, 2u, 3u, 12345u}) {
    bifree::SelfcheckOptions options;
    options.seed = seed;
    options.size = 3;
    EXPECT_TRUE(bifree::all_passed(bifree::run_selfcheck(options))) << seed;
  }
}
