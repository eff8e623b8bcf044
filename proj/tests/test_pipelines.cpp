#include <gtest/gtest.h>

#include <algorithm>

#include "liaison/pipelines.hpp"

using namespace liaison;

namespace {

const CheckResult* find_check(const Certificate& c, const std::string& name) {
  auto it = std::find_if(c.checks.begin(), c.checks.end(), [&](const CheckResult& r) { return r.name == name; });
  return it == c.checks.end() ? nullptr : &*it;
}

std::string failures(const Certificate& c) {
  std::string s = c.aborted.value_or("");
  for (const auto& r : c.checks) {
    if (!r.pass) s += " " + r.name;
  }
  return s;
}

}  // namespace

TEST(Pipelines, Names) {
  EXPECT_EQ(parse_pipeline("h10-8"), PipelineId::kH10_8);
  EXPECT_EQ(parse_pipeline("h10_8"), PipelineId::kH10_8);
  EXPECT_EQ(parse_pipeline("m10-n"), PipelineId::kM10_n);
  EXPECT_EQ(parse_pipeline("h13-7"), PipelineId::kH13_7);
  EXPECT_EQ(parse_pipeline("h12_8"), PipelineId::kH12_8);
  EXPECT_FALSE(parse_pipeline("h11-8").has_value());
  EXPECT_EQ(pipeline_name(PipelineId::kM10_n), "m10_n");
}

TEST(Pipelines, DerivedSeeds) {
  EXPECT_EQ(derived_seed(42, 0), 42u);
  EXPECT_NE(derived_seed(42, 1), 42u);
  EXPECT_NE(derived_seed(42, 1), derived_seed(42, 2));
  EXPECT_NE(derived_seed(42, 1), derived_seed(43, 1));
}

TEST(Pipelines, RejectsBadPrimes) {
  for (std::uint64_t p : {15ull, 1007ull, 1009ull * 1013ull, (1ull << 20) + 7}) {
    try {
      pipeline_m10_n(p, 1, 0);
      FAIL() << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    }
  }
}

TEST(Pipelines, M10WithoutPoints) {
  auto c = pipeline_m10_n(10007, 7, 0);
  EXPECT_TRUE(c.pass()) << failures(c);
  EXPECT_EQ(find_check(c, "h0(I_C'∩I_P(3,3))"), nullptr);
  ASSERT_NE(find_check(c, "C''.contains_points"), nullptr);
  EXPECT_TRUE(find_check(c, "C''.contains_points")->pass);
  ASSERT_NE(find_check(c, "C0∩C'.length"), nullptr);
  EXPECT_EQ(std::get<long long>(find_check(c, "C0∩C'.length")->computed), 21);
  EXPECT_EQ(std::get<long long>(find_check(c, "C'∩C''.length")->computed), 33);
}

TEST(Pipelines, M10OnCurvePointsAndReplay) {
  auto a = pipeline_m10_n(10007, 11, 3, PointMode::kOnCurve);
  EXPECT_TRUE(a.pass()) << failures(a);
  auto b = pipeline_m10_n(10007, 11, 3, PointMode::kOnCurve);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].computed, b.checks[i].computed);
  }
  ASSERT_EQ(a.ideals.size(), b.ideals.size());
  for (std::size_t i = 0; i < a.ideals.size(); ++i) EXPECT_EQ(a.ideals[i].second, b.ideals[i].second);
}

TEST(Pipelines, PassRequiresChecks) {
  Certificate c;
  EXPECT_FALSE(c.pass());
  c.checks.push_back({"x", "==", 1LL, 1LL, true});
  EXPECT_TRUE(c.pass());
  c.aborted = "stopped";
  EXPECT_FALSE(c.pass());
}
