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

// arbor: generate instances, run the incremental engine, run seeded
// experiments, solve min-cost instances, and re-check traces.
//
// Exit status: 0 ok, 1 usage, 2 verification failure, 3 I/O or parse
// error. Default output directory: $ARBOR_OUTPUT_DIR, else ".".

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arbor/arrivals.h"
#include "arbor/engine.h"
#include "arbor/experiment.h"
#include "arbor/instance_io.h"
#include "arbor/mincost.h"
#include "arbor/oracle.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fs::path OutputDir() {
  const char* dir = std::getenv("ARBOR_OUTPUT_DIR");
  return (dir != nullptr && *dir != '\0') ? fs::path(dir) : fs::path(".");
}

fs::path DefaultOutput(const std::string& given, const std::string& name) {
  return given.empty() ? OutputDir() / name : fs::path(given);
}

std::ofstream OpenOut(const fs::path& path, bool force = true) {
  if (!force && fs::exists(path)) {
    throw IoError(path.string() + " exists (use --force to overwrite)");
  }
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

arbor::Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return arbor::ReadInstance(in);
  } catch (const arbor::ParseError& e) {
    throw IoError(path + ": " + e.what());
  }
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  int n = 0;
  int64_t m = -1;
  uint64_t seed = 1;
  std::string out;
  bool force = false;
};

int RunGen(const GenArgs& a) {
  std::ostringstream text;
  if (a.kind == "random") {
    const int64_t m = a.m >= 0 ? a.m : arbor::DefaultArcCount(a.n);
    arbor::WriteInstance(text, arbor::UniformRandomSequence(a.n, m, a.seed));
  } else if (a.kind == "adversarial") {
    arbor::WriteInstance(text, arbor::BidirectedPathAdversary(a.n));
  } else {
    arbor::WriteInstance(text, arbor::TriangleAdversary(a.n));
  }
  if (a.out.empty() || a.out == "-") {
    std::cout << text.str();
  } else {
    std::ofstream out = OpenOut(a.out, a.force);
    out << text.str();
    if (!out) throw IoError("write failed: " + a.out);
  }
  return kExitOk;
}

// --- run -------------------------------------------------------------------

struct RunArgs {
  std::string instance;
  std::string trace;
  std::string summary;
  std::string verify = "off";
  int sample_every = 32;
};

int RunRun(const RunArgs& a) {
  const arbor::Instance inst = LoadInstance(a.instance);
  if (inst.weighted) {
    std::cerr << "run: " << a.instance
              << " is a weighted instance; use 'mincost'\n";
    return kExitUsage;
  }
  arbor::EngineOptions options;
  options.verify = arbor::ParseVerifyLevel(a.verify);
  options.sample_every = a.sample_every;
  options.throw_on_violation = false;
  const std::string stem = fs::path(a.instance).stem().string();

  arbor::RecourseTrace trace;
  try {
    trace = arbor::RunSequence(inst.sequence, options);
  } catch (const std::invalid_argument& e) {
    std::cerr << "run: " << e.what() << '\n';
    return kExitIo;
  }
  {
    std::ofstream out = OpenOut(DefaultOutput(a.trace, stem + ".trace.csv"));
    arbor::WriteTraceCsv(out, trace);
  }
  {
    std::ofstream out =
        OpenOut(DefaultOutput(a.summary, stem + ".summary.json"));
    out << arbor::RunJson(trace, options.verify).dump(2) << '\n';
  }
  std::cout << "n=" << trace.n << " m=" << trace.m
            << " total_recourse=" << trace.total_recourse
            << " violations=" << trace.violations.size() << '\n';
  for (const arbor::Violation& v : trace.violations) {
    std::cerr << "step " << v.step << ": " << v.invariant << ": " << v.detail
              << '\n';
  }
  return trace.violations.empty() ? kExitOk : kExitVerify;
}

// --- experiment ------------------------------------------------------------

struct ExperimentArgs {
  std::vector<int> n_list;
  int64_t m = -1;
  int trials = 1;
  uint64_t seed = 1;
  std::string verify = "off";
  int threads = 1;
  std::string out_dir;
  bool no_gap = false;
};

int RunExperimentCommand(const ExperimentArgs& a) {
  arbor::ExperimentConfig config;
  config.n_list = a.n_list;
  if (a.m >= 0) config.m = a.m;
  config.trials = a.trials;
  config.base_seed = a.seed;
  config.verify = arbor::ParseVerifyLevel(a.verify);
  config.threads = a.threads;
  config.component_gap = !a.no_gap;
  try {
    arbor::ValidateConfig(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "experiment: " << e.what() << '\n';
    return kExitUsage;
  }
  const arbor::ExperimentSummary summary = arbor::RunExperiment(config);
  const fs::path dir = a.out_dir.empty() ? OutputDir() : fs::path(a.out_dir);
  {
    std::ofstream out = OpenOut(dir / "experiment.csv");
    arbor::WriteExperimentCsv(out, summary.rows);
  }
  {
    std::ofstream out = OpenOut(dir / "experiment.json");
    out << arbor::ExperimentJson(summary).dump(2) << '\n';
  }
  std::printf("%6s %8s %6s %14s %12s %12s %8s %10s\n", "n", "m", "ok",
              "mean_recourse", "total_ratio", "phase1_ratio", "sc_frac",
              "gap_steps");
  for (const arbor::SizeSummary& s : summary.sizes) {
    std::printf("%6d %8lld %6d %14.2f %12.5f %12.5f %8.3f %10lld\n", s.n,
                static_cast<long long>(s.m), s.trials_ok,
                s.total_recourse.mean, s.total_ratio.mean,
                s.phase1_ratio.mean, s.sc_by_threshold_fraction,
                static_cast<long long>(s.gap_violating_steps));
  }
  for (const arbor::TrialRow& r : summary.rows) {
    if (!r.ok) {
      std::cerr << "trial n=" << r.n << " seed=" << r.seed
                << " failed: " << r.error << '\n';
    }
  }
  return summary.failed_trials == 0 ? kExitOk : kExitVerify;
}

// --- mincost ---------------------------------------------------------------

struct MincostArgs {
  std::string instance;
  bool verify_dual = false;
  bool verify_brute = false;
  bool incremental = false;
  std::string rule = "parent-arc";
  std::string solver = "cle";
};

int RunMincost(const MincostArgs& a) {
  const arbor::Instance inst = LoadInstance(a.instance);
  if (!inst.weighted) {
    std::cerr << "mincost: " << a.instance << " is not a weighted instance\n";
    return kExitUsage;
  }
  const arbor::CandidateRule rule = a.rule == "parent-tail"
                                        ? arbor::CandidateRule::kParentTail
                                        : arbor::CandidateRule::kParentArc;
  nlohmann::json report;
  report["schema_version"] = arbor::kSchemaVersion;
  report["kind"] = "mincost";
  report["rule"] = arbor::CandidateRuleName(rule);
  bool failed = false;

  const arbor::WeightedDigraph g = inst.weighted_instance.FullGraph();
  try {
    const arbor::Arborescence cle = arbor::ChuLiuEdmonds(g);
    report["cost"] = cle.cost;
    try {
      arbor::CertifiedOptions options;
      options.rule = rule;
      const arbor::CertifiedResult certified =
          arbor::MinArborescenceWithCertificate(g, options);
      report["certified_cost"] = certified.tree.cost;
      report["dual_value"] = certified.packing.Value();
      report["dual_sets"] = certified.packing.sets.size();
      report["restarts"] = certified.restarts;
      if (certified.tree.cost != cle.cost) failed = true;
      if (a.verify_dual) {
        const arbor::CertificateReport check = arbor::VerifyDualCertificate(
            g, certified.tree, certified.packing);
        report["dual_verified"] = check.ok();
        report["dual_diagnostics"] = check.diagnostics;
        if (!check.ok()) failed = true;
      }
    } catch (const arbor::CertificationFailure& e) {
      report["certification_failure"] = e.what();
    }
    if (a.verify_brute) {
      if (g.num_vertices() > arbor::kBruteForceMaxArbVertices) {
        report["brute_force"] = "skipped: too many vertices";
      } else {
        const arbor::Weight brute = arbor::BruteForceMinArborescence(g).cost;
        report["brute_force_cost"] = brute;
        if (brute != cle.cost) failed = true;
      }
    }
  } catch (const arbor::UnreachableError& e) {
    report["error"] = e.what();
    std::cout << report.dump(2) << '\n';
    return kExitVerify;
  }
  if (a.incremental) {
    const arbor::MinCostSolver solver = a.solver == "certified"
                                            ? arbor::MinCostSolver::kCertified
                                            : arbor::MinCostSolver::kChuLiuEdmonds;
    try {
      const arbor::IncrementalMinCostResult inc =
          arbor::RunIncrementalMinCost(inst.weighted_instance, solver, rule);
      report["incremental"] = {
          {"solver", a.solver},
          {"arrivals", inc.changes.size()},
          {"total_recourse", inc.total_recourse},
          {"final_cost", inc.costs.back()},
          {"certification_failures", inc.certification_failures}};
    } catch (const arbor::UnreachableError& e) {
      report["incremental"] = {{"error", e.what()}};
      failed = true;
    }
  }
  std::cout << report.dump(2) << '\n';
  return failed ? kExitVerify : kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string instance;
  std::string trace;
};

int RunVerify(const VerifyArgs& a) {
  const arbor::Instance inst = LoadInstance(a.instance);
  if (inst.weighted) {
    std::cerr << "verify: weighted instances have no trace\n";
    return kExitUsage;
  }
  std::ifstream in(a.trace);
  if (!in) throw IoError("cannot open " + a.trace);
  std::vector<arbor::StepRecord> records;
  try {
    records = arbor::ReadTraceCsv(in);
  } catch (const arbor::ParseError& e) {
    throw IoError(a.trace + ": " + e.what());
  }
  const arbor::ArcSequence& seq = inst.sequence;
  int problems = 0;
  auto problem = [&](int step, const std::string& what) {
    if (++problems <= 20) std::cerr << "step " << step << ": " << what << '\n';
  };
  if (static_cast<int>(records.size()) != seq.size()) {
    problem(0, "trace has " + std::to_string(records.size()) +
                   " rows, instance has " + std::to_string(seq.size()) +
                   " arcs");
  }
  arbor::Digraph g(seq.n);
  int64_t total = 0;
  const size_t steps = std::min<size_t>(records.size(), seq.entries.size());
  for (size_t i = 0; i < steps; ++i) {
    const arbor::StepRecord& r = records[i];
    const int step = static_cast<int>(i + 1);
    if (r.step != step) problem(step, "step index mismatch");
    if (r.arc != seq.entries[i].arc) problem(step, "arc differs from instance");
    g.AddArc(seq.entries[i].arc.tail, seq.entries[i].arc.head);
    const int expected = arbor::MaxForestCardinality(g);
    if (r.forest_size != expected) {
      problem(step, "forest size " + std::to_string(r.forest_size) +
                        " but the maximum is " + std::to_string(expected));
    }
    if (r.num_roots != seq.n - r.forest_size) {
      problem(step, "root count inconsistent with forest size");
    }
    if (r.deletions < 0 || (!r.updated && r.deletions != 0)) {
      problem(step, "deletions inconsistent with update flag");
    }
    if (r.updated && r.deletions > r.path_length) {
      problem(step, "deletions exceed path length");
    }
    total += r.deletions;
  }
  std::cout << "checked " << steps << " steps, total_recourse=" << total
            << ", problems=" << problems << '\n';
  return problems == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum arborescence forests under arc insertions"};
  app.require_subcommand(1);
  const std::vector<std::string> levels = {"off", "sampled", "full"};

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("kind", gen.kind, "random | adversarial | mincost-adversarial")
      ->required()
      ->check(CLI::IsMember({"random", "adversarial", "mincost-adversarial"}));
  gen_cmd->add_option("--n", gen.n, "Number of vertices")->required();
  gen_cmd->add_option("--m", gen.m, "Number of arcs (random; default ceil(n log2 n))");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out,-o", gen.out, "Output path (stdout if omitted)");
  gen_cmd->add_flag("--force", gen.force, "Overwrite an existing file");

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run the engine on an instance");
  run_cmd->add_option("instance", run.instance)->required();
  run_cmd->add_option("--trace", run.trace, "Trace CSV path");
  run_cmd->add_option("--summary", run.summary, "Summary JSON path");
  run_cmd->add_option("--verify", run.verify)->check(CLI::IsMember(levels));
  run_cmd->add_option("--sample-every", run.sample_every)
      ->check(CLI::PositiveNumber);

  ExperimentArgs exp;
  CLI::App* exp_cmd =
      app.add_subcommand("experiment", "Seeded trials on random arrivals");
  exp_cmd->add_option("--n", exp.n_list, "Vertex counts")
      ->required()
      ->delimiter(',');
  exp_cmd->add_option("--m", exp.m, "Arc count (default ceil(n log2 n))");
  exp_cmd->add_option("--trials", exp.trials);
  exp_cmd->add_option("--seed", exp.seed, "Base seed; trial i uses seed+i");
  exp_cmd->add_option("--verify", exp.verify)->check(CLI::IsMember(levels));
  exp_cmd->add_option("--threads", exp.threads);
  exp_cmd->add_option("--out-dir", exp.out_dir);
  exp_cmd->add_flag("--no-gap", exp.no_gap, "Skip the component-size scan");

  MincostArgs mc;
  CLI::App* mc_cmd =
      app.add_subcommand("mincost", "Minimum-cost arborescence of an instance");
  mc_cmd->add_option("instance", mc.instance)->required();
  mc_cmd->add_flag("--verify-dual", mc.verify_dual);
  mc_cmd->add_flag("--verify-brute", mc.verify_brute);
  mc_cmd->add_flag("--incremental", mc.incremental);
  mc_cmd->add_option("--rule", mc.rule)
      ->check(CLI::IsMember({"parent-arc", "parent-tail"}));
  mc_cmd->add_option("--solver", mc.solver, "Incremental solver")
      ->check(CLI::IsMember({"cle", "certified"}));

  VerifyArgs ver;
  CLI::App* ver_cmd =
      app.add_subcommand("verify", "Re-check a trace against its instance");
  ver_cmd->add_option("instance", ver.instance)->required();
  ver_cmd->add_option("trace", ver.trace)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return RunGen(gen);
    if (run_cmd->parsed()) return RunRun(run);
    if (exp_cmd->parsed()) return RunExperimentCommand(exp);
    if (mc_cmd->parsed()) return RunMincost(mc);
    if (ver_cmd->parsed()) return RunVerify(ver);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
