// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arbor/experiment.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "arbor/arrivals.h"
#include "arbor/engine.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace arbor {
namespace {

TEST(GapTest, BetaAtThreshold) {
  // 1 - 1.1/1.6 - ln(1.6)/1.6.
  EXPECT_NEAR(GapBeta(1.6), 0.0187, 1e-4);
  EXPECT_GT(GapBeta(1.6), kGapAlpha);
  for (double c = 1.6; c < 50; c += 0.1) EXPECT_GE(GapBeta(c), GapBeta(1.6));
}

TEST(GapTest, CountsRootsInBand) {
  StepStats s;
  // n = 1 << 14: band [140, 294.9].
  const int n = 1 << 14;
  s.root_in_component_sizes = {{0, 1}, {1, 140}, {2, 294}, {3, 295}, {4, n}};
  EXPECT_EQ(CountComponentGap(s, n), 2);
  StepStats single;
  single.root_in_component_sizes = {{0, n}};
  EXPECT_EQ(CountComponentGap(single, n), 0);
}

TEST(GapTest, BandIsEmptyBelowLargeN) {
  const auto [lo, hi] = ComponentGapBand(1024);
  EXPECT_DOUBLE_EQ(lo, 100.0);
  EXPECT_NEAR(hi, 18.432, 1e-9);
  EXPECT_GT(lo, hi);
}

TEST(DefaultArcCountTest, Values) {
  EXPECT_EQ(DefaultArcCount(128), 896);
  EXPECT_EQ(DefaultArcCount(1024), 10240);
  EXPECT_EQ(DefaultArcCount(3), 5);
  EXPECT_EQ(DefaultArcCount(2), 2);
}

TEST(ExperimentTest, RejectsBadConfigs) {
  ExperimentConfig c;
  c.n_list = {16};
  c.trials = 0;
  EXPECT_THROW(RunExperiment(c), std::invalid_argument);
  c.trials = 1;
  c.n_list = {1};
  EXPECT_THROW(RunExperiment(c), std::invalid_argument);
  c.n_list = {4};
  c.m = 13;
  EXPECT_THROW(RunExperiment(c), std::invalid_argument);
}

TEST(ExperimentTest, DeterministicAndParallelMatchesSerial) {
  ExperimentConfig c;
  c.n_list = {32, 64};
  c.trials = 4;
  c.base_seed = 17;
  const ExperimentSummary a = RunExperiment(c);
  const ExperimentSummary b = RunExperiment(c);
  c.threads = 3;
  const ExperimentSummary p = RunExperiment(c);
  EXPECT_EQ(a.rows, b.rows);
  EXPECT_EQ(a.rows, p.rows);
  ASSERT_EQ(a.rows.size(), 8u);
  EXPECT_EQ(a.rows[1].seed, 18u);
  EXPECT_EQ(a.rows[5].trial, 1);
  EXPECT_EQ(ExperimentJson(a)["trials"], ExperimentJson(p)["trials"]);
  EXPECT_EQ(ExperimentJson(a)["sizes"], ExperimentJson(p)["sizes"]);
}

TEST(ExperimentTest, RowsMatchDirectRuns) {
  ExperimentConfig c;
  c.n_list = {40};
  c.trials = 2;
  c.base_seed = 5;
  c.verify = VerifyLevel::kFull;
  const ExperimentSummary s = RunExperiment(c);
  for (const TrialRow& r : s.rows) {
    ASSERT_TRUE(r.ok) << r.error;
    EXPECT_EQ(r.phase1_recourse + r.phase2_recourse, r.total_recourse);
    const double lg = std::log2(40);
    EXPECT_DOUBLE_EQ(r.total_ratio, r.total_recourse / (r.m * lg * lg));
    ASSERT_TRUE(r.sc_step.has_value());
    EXPECT_EQ(r.sc_by_threshold, r.sc_threshold_step.has_value() &&
                                     *r.sc_step <= *r.sc_threshold_step);
  }
}

TEST(ExperimentTest, AggregatesRecomputeFromRows) {
  ExperimentConfig c;
  c.n_list = {24, 48};
  c.trials = 5;
  const ExperimentSummary s = RunExperiment(c);
  const auto again = AggregateRows(c.n_list, s.rows);
  ASSERT_EQ(again.size(), 2u);
  for (size_t i = 0; i < again.size(); ++i) {
    EXPECT_DOUBLE_EQ(again[i].total_recourse.mean, s.sizes[i].total_recourse.mean);
    EXPECT_DOUBLE_EQ(again[i].total_ratio.stddev, s.sizes[i].total_ratio.stddev);
  }
  double sum = 0;
  for (const TrialRow& r : s.rows) {
    if (r.n == 24) sum += r.total_recourse;
  }
  EXPECT_DOUBLE_EQ(s.sizes[0].total_recourse.mean, sum / 5);
}

TEST(ExperimentTest, JsonHasSchemaAndTotals) {
  ExperimentConfig c;
  c.n_list = {20};
  c.trials = 3;
  const ExperimentSummary s = RunExperiment(c);
  const nlohmann::json j = ExperimentJson(s);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  ASSERT_EQ(j["trials"].size(), 3u);
  std::ostringstream csv;
  WriteExperimentCsv(csv, s.rows);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  int64_t csv_total = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string field;
    for (int i = 0; i < 6; ++i) std::getline(row, field, ',');
    csv_total += std::stoll(field);
  }
  int64_t json_total = 0;
  for (const auto& t : j["trials"]) json_total += t["total_recourse"].get<int64_t>();
  EXPECT_EQ(csv_total, json_total);
}

TEST(SummarizeTest, MeanAndSampleStddev) {
  const Aggregate a = Summarize({1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(a.mean, 2.5);
  EXPECT_NEAR(a.stddev, std::sqrt(5.0 / 3.0), 1e-12);
  EXPECT_DOUBLE_EQ(Summarize({7}).stddev, 0.0);
}

TEST(RunJsonTest, Fields) {
  const nlohmann::json j =
      RunJson(RunSequence(BidirectedPathAdversary(4)), VerifyLevel::kOff);
  EXPECT_EQ(j["total_recourse"], 3);
  EXPECT_EQ(j["final_num_roots"], 1);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_TRUE(j["phase1_recourse"].is_null());
}

}  // namespace
}  // namespace arbor
