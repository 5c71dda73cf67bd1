#include <gtest/gtest.h>

#include <algorithm>

#include "chainmaps/verify.hpp"

namespace chainmaps {
namespace {

const Run* find_run(const VerificationReport& r, std::string_view check, int n) {
  for (const auto& run : r.runs)
    if (run.check == check && run.n == n) return &run;
  return nullptr;
}

TEST(CrossValidate, BruteForceAllFamiliesUpToSeven) {
  const auto report =
      cross_validate(1, 7, {kCountedFamilies.begin(), kCountedFamilies.end()}, Mode::brute);
  EXPECT_FALSE(report.runs.empty());
  for (const auto& r : report.runs) EXPECT_TRUE(r.pass) << r.check << " n=" << r.n << " at " << r.at;
  EXPECT_TRUE(report.all_passed());
}

TEST(CrossValidate, DirectStreamsUpToFourteen) {
  const auto report = cross_validate(1, 14, {Family::OCT, Family::ORCT, Family::ODCT}, Mode::direct);
  for (const auto& r : report.runs) EXPECT_TRUE(r.pass) << r.check << " n=" << r.n << " at " << r.at;
  const chainmaps::Run* order = find_run(report, "oct_order", 14);
  ASSERT_NE(order, nullptr);
  EXPECT_EQ(order->formula_value, oct_order(14));
}

TEST(CrossValidate, SingleOrderRun) {
  const auto report = cross_validate(3, 3, {Family::ODCT}, Mode::brute);
  const chainmaps::Run* r = find_run(report, "odct_order", 3);
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->formula_value, 4);
  EXPECT_EQ(r->enumerated_value, 4);
  EXPECT_TRUE(r->pass);
  EXPECT_EQ(r->at, "*");
  for (const auto& run : report.runs) EXPECT_EQ(run.family, "ODCT");
}

TEST(CrossValidate, BudgetAndRange) {
  EXPECT_THROW(cross_validate(9, 9, {Family::OCT}, Mode::brute), BudgetExceeded);
  EXPECT_THROW(cross_validate(3, 2, {Family::OCT}, Mode::direct), std::invalid_argument);
  EXPECT_THROW(cross_validate(0, 2, {Family::OCT}, Mode::direct), std::invalid_argument);
}

TEST(CrossValidate, ReportsAreDeterministic) {
  const auto a = cross_validate(1, 6, {Family::ORCT, Family::E_OCT}, Mode::direct);
  const auto b = cross_validate(1, 6, {Family::ORCT, Family::E_OCT}, Mode::direct);
  ASSERT_EQ(a.runs.size(), b.runs.size());
  for (std::size_t i = 0; i < a.runs.size(); ++i) EXPECT_TRUE(a.runs[i].same_outcome(b.runs[i]));
}

TEST(InvariantSuite, GreenUpToSix) {
  const auto report = invariant_suite(1, 6);
  for (const auto& r : report.runs) EXPECT_TRUE(r.pass) << r.check << " n=" << r.n;
  EXPECT_TRUE(report.all_passed());
  const chainmaps::Run* convex = find_run(invariant_suite(2, 2), "image_convex", 2);
  ASSERT_NE(convex, nullptr);
  EXPECT_EQ(convex->formula_value, 4);  // contractions of X_2
  EXPECT_EQ(convex->enumerated_value, 4);
}

TEST(RecurrenceSuite, Green) {
  const auto report = recurrence_suite(RecurrenceBounds{30, 200, 7});
  for (const auto& r : report.runs) EXPECT_TRUE(r.pass) << r.check << " n=" << r.n << " at " << r.at;
  EXPECT_THROW(recurrence_suite(RecurrenceBounds{30, 200, 9}), BudgetExceeded);
}

TEST(Report, FailingRunRecordsFirstMismatch) {
  detail::RunBuilder b("s", "c", "OCT", "p", 3);
  b.compare("p=1", 1, 1);
  b.compare("p=2", 5, 4);
  b.compare("p=3", 2, 3);
  const chainmaps::Run r = b.finish();
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.at, "p=2");
  EXPECT_EQ(r.formula_value, 5);
  EXPECT_EQ(r.enumerated_value, 4);
  EXPECT_EQ(r.mismatches, 2u);
}

TEST(Report, JsonRoundTripAndSummary) {
  auto report = cross_validate(1, 4, {Family::OCT, Family::ODCT}, Mode::direct);
  detail::RunBuilder b("s", "synthetic", "OCT", "-", 1);
  b.compare("*", 2, 3);
  report.runs.push_back(b.finish());

  const auto j = to_json(report);
  EXPECT_EQ(j.at("schema"), kReportSchema);
  EXPECT_FALSE(j.at("all_passed").get<bool>());
  const auto back = report_from_json(nlohmann::ordered_json::parse(j.dump()));
  ASSERT_EQ(back.runs.size(), report.runs.size());
  for (std::size_t i = 0; i < back.runs.size(); ++i)
    EXPECT_TRUE(back.runs[i].same_outcome(report.runs[i]));

  const auto summary = report.summary();
  std::uint64_t total = 0;
  for (const auto& [family, s] : summary) {
    EXPECT_EQ(s.runs, s.passed + s.failed);
    total += s.runs;
  }
  EXPECT_EQ(total, report.runs.size());
  EXPECT_EQ(summary.at("OCT").failed, 1u);
  EXPECT_EQ(j.at("summary").at("OCT").at("failed"), 1);
}

TEST(Report, RejectsInconsistentStatusAndWrongSchema) {
  auto j = to_json(cross_validate(2, 2, {Family::OCT}, Mode::direct));
  auto bad = j;
  bad["runs"][0]["status"] = "fail";
  EXPECT_THROW(report_from_json(bad), std::invalid_argument);
  auto old = j;
  old["schema"] = 0;
  EXPECT_THROW(report_from_json(old), std::invalid_argument);
  auto missing = j;
  missing["runs"][0].erase("at");
  EXPECT_THROW(report_from_json(missing), std::invalid_argument);
}

}  // namespace
}  // namespace chainmaps
