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

// Seeded recourse experiments on uniform random arrivals, plus the JSON
// and CSV reports the command-line tool writes. All logarithms are base 2.

#ifndef ARBOR_EXPERIMENT_H_
#define ARBOR_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "arbor/engine.h"

namespace arbor {

inline constexpr int kSchemaVersion = 1;

// 1 - 1.1/c - ln(c)/c, increasing for c >= 1.
double GapBeta(double c);
inline constexpr double kGapAlpha = 0.018;
inline constexpr double kGapRhoFactor = 1.6;  // qualifying steps: rho > 1.6/n

// Default arc count: ceil(n log2 n), capped at n(n-1).
int64_t DefaultArcCount(int n);

// Closed band [10 log2 n, alpha n] of forbidden in-component sizes.
std::pair<double, double> ComponentGapBand(int n, double alpha = kGapAlpha);

// Roots whose in-component size lies in the band.
int CountComponentGap(const StepStats& stats, int n, double alpha = kGapAlpha);

struct ExperimentConfig {
  std::vector<int> n_list;
  std::optional<int64_t> m;  // default rule per n when absent
  int trials = 1;
  uint64_t base_seed = 1;
  VerifyLevel verify = VerifyLevel::kOff;
  int threads = 1;
  bool component_gap = true;
  double alpha = kGapAlpha;
  // The strong-connectivity check looks this many times m arcs ahead.
  double lookahead = 2.5;
};

// Throws std::invalid_argument when the configuration is unusable.
void ValidateConfig(const ExperimentConfig& config);

struct TrialRow {
  int n = 0;
  int64_t m = 0;
  int trial = 0;
  uint64_t seed = 0;
  bool ok = true;
  std::string error;
  int64_t total_recourse = 0;
  int64_t phase1_recourse = 0;
  int64_t phase2_recourse = 0;
  double total_ratio = 0;   // total / (m log2^2 n)
  double phase1_ratio = 0;  // phase1 / (n log2 n)
  // First step at which the graph is strongly connected, over the
  // extended sequence; absent if never.
  std::optional<int64_t> sc_step;
  // Index of the first arc with rho > 2 log2 n / n; absent if the extended
  // sequence ends first.
  std::optional<int64_t> sc_threshold_step;
  bool sc_by_threshold = false;
  int64_t gap_qualifying_steps = 0;
  int64_t gap_violations = 0;  // (step, root) pairs
  int64_t gap_violating_steps = 0;
  int invariant_violations = 0;

  friend bool operator==(const TrialRow&, const TrialRow&) = default;
};

struct Aggregate {
  double mean = 0;
  double stddev = 0;  // sample standard deviation; 0 for one value
};

Aggregate Summarize(const std::vector<double>& values);

struct SizeSummary {
  int n = 0;
  int64_t m = 0;
  int trials_ok = 0;
  int trials_failed = 0;
  Aggregate total_recourse;
  Aggregate phase1_recourse;
  Aggregate phase2_recourse;
  Aggregate total_ratio;
  Aggregate phase1_ratio;
  double sc_by_threshold_fraction = 0;
  int64_t gap_qualifying_steps = 0;
  int64_t gap_violating_steps = 0;
  int64_t gap_violations = 0;
};

struct ExperimentSummary {
  ExperimentConfig config;
  std::vector<TrialRow> rows;  // ordered by (n position, trial)
  std::vector<SizeSummary> sizes;
  int failed_trials = 0;
};

// One trial: n vertices, m arcs, given seed.
TrialRow RunTrial(int n, int64_t m, uint64_t seed,
                  const ExperimentConfig& config);

// Trials run on `threads` workers; rows do not depend on scheduling.
ExperimentSummary RunExperiment(const ExperimentConfig& config);

// Aggregates recomputed from rows (failed trials excluded).
std::vector<SizeSummary> AggregateRows(const std::vector<int>& n_list,
                                       const std::vector<TrialRow>& rows);

nlohmann::json ExperimentJson(const ExperimentSummary& summary);
void WriteExperimentCsv(std::ostream& out, const std::vector<TrialRow>& rows);

// Summary of one engine run.
nlohmann::json RunJson(const RecourseTrace& trace, VerifyLevel verify);

}  // namespace arbor

#endif  // ARBOR_EXPERIMENT_H_
