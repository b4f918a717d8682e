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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "arbor/arrivals.h"
#include "arbor/scc.h"

namespace arbor {

double GapBeta(double c) { return 1.0 - 1.1 / c - std::log(c) / c; }

int64_t DefaultArcCount(int n) {
  if (n < 2) return 0;
  const int64_t m = static_cast<int64_t>(std::ceil(n * std::log2(n)));
  return std::min<int64_t>(m, static_cast<int64_t>(n) * (n - 1));
}

std::pair<double, double> ComponentGapBand(int n, double alpha) {
  return {10.0 * std::log2(n), alpha * n};
}

int CountComponentGap(const StepStats& stats, int n, double alpha) {
  const auto [lo, hi] = ComponentGapBand(n, alpha);
  int count = 0;
  for (const auto& [root, size] : stats.root_in_component_sizes) {
    if (size >= lo && size <= hi) ++count;
  }
  return count;
}

void ValidateConfig(const ExperimentConfig& config) {
  if (config.n_list.empty()) throw std::invalid_argument("no sizes given");
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.threads < 1) throw std::invalid_argument("threads must be >= 1");
  for (int n : config.n_list) {
    if (n < 2) throw std::invalid_argument("every n must be >= 2");
    if (config.m.has_value() &&
        (*config.m < 0 || *config.m > static_cast<int64_t>(n) * (n - 1))) {
      throw std::invalid_argument("m outside [0, n(n-1)] for n = " +
                                  std::to_string(n));
    }
  }
  if (!(config.lookahead >= 1.0)) {
    throw std::invalid_argument("lookahead must be >= 1");
  }
}

namespace {

// Smallest k such that the first k arcs form a strongly connected graph.
std::optional<int64_t> FirstStronglyConnectedStep(const ArcSequence& seq) {
  Digraph full(seq.n);
  for (const SequenceEntry& e : seq.entries) full.AddArc(e.arc.tail, e.arc.head);
  if (!IsStronglyConnected(full)) return std::nullopt;
  int64_t lo = 0;
  int64_t hi = full.num_arcs();
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (IsStronglyConnected(full.Prefix(static_cast<int>(mid)))) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

TrialRow RunTrial(int n, int64_t m, uint64_t seed,
                  const ExperimentConfig& config) {
  TrialRow row;
  row.n = n;
  row.m = m;
  row.seed = seed;
  const int64_t pairs = static_cast<int64_t>(n) * (n - 1);
  const int64_t extended = std::min<int64_t>(
      pairs, std::max<int64_t>(
                 m, static_cast<int64_t>(std::ceil(config.lookahead * m))));
  ArcSequence seq = UniformRandomSequence(n, extended, seed);

  const double sc_rho = 2.0 * std::log2(n) / n;
  for (int i = 0; i < seq.size(); ++i) {
    if (*seq.entries[i].rho > sc_rho) {
      row.sc_threshold_step = i + 1;
      break;
    }
  }
  row.sc_step = FirstStronglyConnectedStep(seq);
  row.sc_by_threshold = row.sc_step.has_value() &&
                        row.sc_threshold_step.has_value() &&
                        *row.sc_step <= *row.sc_threshold_step;

  seq.entries.resize(m);
  EngineOptions options;
  options.verify = config.verify;
  options.throw_on_violation = false;
  const double gap_rho = kGapRhoFactor / n;
  StepHook hook;
  if (config.component_gap) {
    hook = [&](const Digraph& g, const ArborescenceForest& forest,
               const StepRecord& record) {
      if (!record.rho.has_value() || *record.rho <= gap_rho) return;
      ++row.gap_qualifying_steps;
      const int bad = CountComponentGap(ComputeStepStats(g, forest), n,
                                        config.alpha);
      row.gap_violations += bad;
      if (bad > 0) ++row.gap_violating_steps;
    };
  }
  const RecourseTrace trace = RunSequence(seq, options, hook);
  row.total_recourse = trace.total_recourse;
  row.phase1_recourse = trace.phase1_recourse.value_or(0);
  row.phase2_recourse = trace.phase2_recourse.value_or(0);
  const double lg = std::log2(n);
  row.total_ratio = m > 0 ? row.total_recourse / (m * lg * lg) : 0.0;
  row.phase1_ratio = row.phase1_recourse / (n * lg);
  row.invariant_violations = static_cast<int>(trace.violations.size());
  if (!trace.violations.empty()) {
    row.ok = false;
    const Violation& v = trace.violations.front();
    row.error = "step " + std::to_string(v.step) + ": " + v.invariant + ": " +
                v.detail;
  }
  return row;
}

Aggregate Summarize(const std::vector<double>& values) {
  Aggregate a;
  if (values.empty()) return a;
  double sum = 0;
  for (double v : values) sum += v;
  a.mean = sum / values.size();
  if (values.size() > 1) {
    double sq = 0;
    for (double v : values) sq += (v - a.mean) * (v - a.mean);
    a.stddev = std::sqrt(sq / (values.size() - 1));
  }
  return a;
}

std::vector<SizeSummary> AggregateRows(const std::vector<int>& n_list,
                                       const std::vector<TrialRow>& rows) {
  std::vector<SizeSummary> out;
  for (int n : n_list) {
    SizeSummary s;
    s.n = n;
    std::vector<double> total, p1, p2, rt, r1;
    int sc = 0;
    for (const TrialRow& r : rows) {
      if (r.n != n) continue;
      s.m = r.m;
      if (!r.ok) {
        ++s.trials_failed;
        continue;
      }
      ++s.trials_ok;
      total.push_back(static_cast<double>(r.total_recourse));
      p1.push_back(static_cast<double>(r.phase1_recourse));
      p2.push_back(static_cast<double>(r.phase2_recourse));
      rt.push_back(r.total_ratio);
      r1.push_back(r.phase1_ratio);
      if (r.sc_by_threshold) ++sc;
      s.gap_qualifying_steps += r.gap_qualifying_steps;
      s.gap_violating_steps += r.gap_violating_steps;
      s.gap_violations += r.gap_violations;
    }
    s.total_recourse = Summarize(total);
    s.phase1_recourse = Summarize(p1);
    s.phase2_recourse = Summarize(p2);
    s.total_ratio = Summarize(rt);
    s.phase1_ratio = Summarize(r1);
    s.sc_by_threshold_fraction =
        s.trials_ok > 0 ? static_cast<double>(sc) / s.trials_ok : 0.0;
    out.push_back(s);
  }
  return out;
}

ExperimentSummary RunExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  ExperimentSummary summary;
  summary.config = config;
  struct Job {
    int n;
    int64_t m;
    int trial;
  };
  std::vector<Job> jobs;
  for (int n : config.n_list) {
    const int64_t m = config.m.value_or(DefaultArcCount(n));
    for (int t = 0; t < config.trials; ++t) jobs.push_back({n, m, t});
  }
  summary.rows.resize(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      const Job& job = jobs[i];
      const uint64_t seed = config.base_seed + job.trial;
      TrialRow row;
      try {
        row = RunTrial(job.n, job.m, seed, config);
      } catch (const std::exception& e) {
        row.n = job.n;
        row.m = job.m;
        row.seed = seed;
        row.ok = false;
        row.error = e.what();
      }
      row.trial = job.trial;
      summary.rows[i] = std::move(row);
    }
  };
  const int threads =
      std::min<int>(config.threads, static_cast<int>(jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const TrialRow& r : summary.rows) {
    if (!r.ok) ++summary.failed_trials;
  }
  summary.sizes = AggregateRows(config.n_list, summary.rows);
  return summary;
}

namespace {

nlohmann::json AggregateJson(const Aggregate& a) {
  return {{"mean", a.mean}, {"stddev", a.stddev}};
}

template <typename T>
nlohmann::json Optional(const std::optional<T>& v) {
  return v.has_value() ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json ExperimentJson(const ExperimentSummary& summary) {
  const ExperimentConfig& c = summary.config;
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "experiment";
  j["log_base"] = 2;
  j["config"] = {{"n_list", c.n_list},
                 {"m", Optional(c.m)},
                 {"m_rule", "ceil(n*log2(n))"},
                 {"trials", c.trials},
                 {"base_seed", c.base_seed},
                 {"verify", VerifyLevelName(c.verify)},
                 {"threads", c.threads},
                 {"alpha", c.alpha},
                 {"lookahead", c.lookahead}};
  nlohmann::json rows = nlohmann::json::array();
  for (const TrialRow& r : summary.rows) {
    rows.push_back({{"n", r.n},
                    {"m", r.m},
                    {"trial", r.trial},
                    {"seed", r.seed},
                    {"ok", r.ok},
                    {"error", r.error},
                    {"total_recourse", r.total_recourse},
                    {"phase1_recourse", r.phase1_recourse},
                    {"phase2_recourse", r.phase2_recourse},
                    {"total_ratio", r.total_ratio},
                    {"phase1_ratio", r.phase1_ratio},
                    {"sc_step", Optional(r.sc_step)},
                    {"sc_threshold_step", Optional(r.sc_threshold_step)},
                    {"sc_by_threshold", r.sc_by_threshold},
                    {"gap_qualifying_steps", r.gap_qualifying_steps},
                    {"gap_violating_steps", r.gap_violating_steps},
                    {"gap_violations", r.gap_violations},
                    {"invariant_violations", r.invariant_violations}});
  }
  j["trials"] = rows;
  nlohmann::json sizes = nlohmann::json::array();
  for (const SizeSummary& s : summary.sizes) {
    const auto [lo, hi] = ComponentGapBand(s.n, c.alpha);
    sizes.push_back({{"n", s.n},
                     {"m", s.m},
                     {"trials_ok", s.trials_ok},
                     {"trials_failed", s.trials_failed},
                     {"total_recourse", AggregateJson(s.total_recourse)},
                     {"phase1_recourse", AggregateJson(s.phase1_recourse)},
                     {"phase2_recourse", AggregateJson(s.phase2_recourse)},
                     {"total_ratio", AggregateJson(s.total_ratio)},
                     {"phase1_ratio", AggregateJson(s.phase1_ratio)},
                     {"sc_by_threshold_fraction", s.sc_by_threshold_fraction},
                     {"gap_band", {lo, hi}},
                     {"gap_qualifying_steps", s.gap_qualifying_steps},
                     {"gap_violating_steps", s.gap_violating_steps},
                     {"gap_violations", s.gap_violations}});
  }
  j["sizes"] = sizes;
  j["failed_trials"] = summary.failed_trials;
  return j;
}

void WriteExperimentCsv(std::ostream& out, const std::vector<TrialRow>& rows) {
  out << "n,m,trial,seed,ok,total_recourse,phase1_recourse,phase2_recourse,"
         "total_ratio,phase1_ratio,sc_step,sc_threshold_step,"
         "sc_by_threshold,gap_qualifying_steps,gap_violating_steps,"
         "gap_violations\n";
  char buf[64];
  auto real = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  auto opt = [](const std::optional<int64_t>& v) {
    return v.has_value() ? std::to_string(*v) : std::string();
  };
  for (const TrialRow& r : rows) {
    out << r.n << ',' << r.m << ',' << r.trial << ',' << r.seed << ','
        << (r.ok ? 1 : 0) << ',' << r.total_recourse << ','
        << r.phase1_recourse << ',' << r.phase2_recourse << ','
        << real(r.total_ratio) << ',' << real(r.phase1_ratio) << ','
        << opt(r.sc_step) << ',' << opt(r.sc_threshold_step) << ','
        << (r.sc_by_threshold ? 1 : 0) << ',' << r.gap_qualifying_steps << ','
        << r.gap_violating_steps << ',' << r.gap_violations << '\n';
  }
}

nlohmann::json RunJson(const RecourseTrace& trace, VerifyLevel verify) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "run";
  j["n"] = trace.n;
  j["m"] = trace.m;
  j["verify"] = VerifyLevelName(verify);
  j["total_recourse"] = trace.total_recourse;
  j["phase1_recourse"] = Optional(trace.phase1_recourse);
  j["phase2_recourse"] = Optional(trace.phase2_recourse);
  int updates = 0;
  int forest_size = 0;
  int roots = trace.n;
  for (const StepRecord& r : trace.records) {
    if (r.updated) ++updates;
    forest_size = r.forest_size;
    roots = r.num_roots;
  }
  j["updates"] = updates;
  j["final_forest_size"] = forest_size;
  j["final_num_roots"] = roots;
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& v : trace.violations) {
    violations.push_back(
        {{"step", v.step}, {"invariant", v.invariant}, {"detail", v.detail}});
  }
  j["violations"] = violations;
  return j;
}

}  // namespace arbor
