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

#include "arbor/engine.h"

#include <algorithm>

#include "arbor/oracle.h"

namespace arbor {

const char* VerifyLevelName(VerifyLevel level) {
  switch (level) {
    case VerifyLevel::kOff:
      return "off";
    case VerifyLevel::kSampled:
      return "sampled";
    case VerifyLevel::kFull:
      return "full";
  }
  return "off";
}

VerifyLevel ParseVerifyLevel(const std::string& name) {
  if (name == "off") return VerifyLevel::kOff;
  if (name == "sampled") return VerifyLevel::kSampled;
  if (name == "full") return VerifyLevel::kFull;
  throw std::invalid_argument("unknown verify level '" + name +
                              "' (expected off, sampled or full)");
}

namespace {

std::string ViolationMessage(const Violation& v) {
  return "step " + std::to_string(v.step) + ": " + v.invariant + ": " +
         v.detail;
}

}  // namespace

InvariantViolation::InvariantViolation(Violation v)
    : std::runtime_error(ViolationMessage(v)), violation_(std::move(v)) {}

IncrementalArborescence::IncrementalArborescence(int n, EngineOptions options)
    : options_(options), graph_(n), forest_(n) {
  if (options_.sample_every < 1) options_.sample_every = 1;
}

void IncrementalArborescence::Report(std::string_view name,
                                     std::string detail) {
  Violation v{steps_, std::string(name), std::move(detail)};
  if (options_.throw_on_violation) throw InvariantViolation(std::move(v));
  violations_.push_back(std::move(v));
}

StepRecord IncrementalArborescence::Insert(const Arc& arc,
                                           std::optional<double> rho) {
  const bool duplicate = graph_.AddArc(arc);
  ++steps_;
  StepRecord record;
  record.step = steps_;
  record.arc = arc;
  record.rho = rho;

  const ArcId arc_id = graph_.FindArc(arc.tail, arc.head);
  std::vector<Vertex> source_in_before;
  const int size_before = forest_.size();
  if (!duplicate) {
    if (auto path = FindFeasiblePath(forest_, graph_, arc_id)) {
      if (options_.verify == VerifyLevel::kFull) {
        for (auto& problem : CheckFeasiblePath(forest_, graph_, *path)) {
          Report(invariant::kFeasiblePath, problem);
        }
        source_in_before = InComponent(graph_, path->source(), arc_id);
      }
      record.updated = true;
      record.path_length = static_cast<int>(path->vertices.size());
      record.source_root = path->source();
      record.vanished_root = path->target();
      record.vanishing_arb_size = forest_.arborescence_size(path->target());
      const std::vector<Arc> deleted =
          ApplyPathUpdate(forest_, graph_, path->vertices);
      record.deletions = static_cast<int>(deleted.size());
    }
  }
  record.forest_size = forest_.size();
  record.num_roots = forest_.num_roots();
  total_recourse_ += record.deletions;

  if (record.deletions > record.vanishing_arb_size) {
    Report(invariant::kRecourseBound,
           std::to_string(record.deletions) + " deletions exceed |T'| = " +
               std::to_string(record.vanishing_arb_size));
  }
  if (record.forest_size != size_before + (record.updated ? 1 : 0)) {
    Report(invariant::kRootBookkeeping,
           "forest size changed from " + std::to_string(size_before) +
               " to " + std::to_string(record.forest_size));
  }
  if (record.updated && (!forest_.IsRoot(record.source_root) ||
                         forest_.IsRoot(record.vanished_root))) {
    Report(invariant::kRootBookkeeping,
           "update did not retire exactly the target root");
  }
  VerifyStep(record, source_in_before);
  return record;
}

void IncrementalArborescence::VerifyStep(
    const StepRecord& record, const std::vector<Vertex>& source_in_before) {
  const bool full = options_.verify == VerifyLevel::kFull;
  const bool sampled = options_.verify == VerifyLevel::kSampled &&
                       steps_ % options_.sample_every == 0;
  if (!full && !sampled) return;

  const int oracle = MaxForestCardinality(graph_);
  if (forest_.size() != oracle) {
    Report(invariant::kMaximality, "|F| = " + std::to_string(forest_.size()) +
                                       " but the maximum is " +
                                       std::to_string(oracle));
  }
  if (!full) return;

  const ValidationReport report = ValidateForest(graph_, forest_);
  for (const auto& problem : report.violations) {
    Report(invariant::kForestValidity, problem);
  }
  if (!report.ok()) return;
  if (!IsMaximum(forest_, graph_)) {
    Report(invariant::kNoRootPath, "some root reaches another root");
  }
  Vertex conflict = kNoVertex;
  const std::vector<Vertex> label =
      RootInComponentLabels(forest_, graph_, &conflict);
  if (conflict != kNoVertex) {
    Report(invariant::kInComponentContainment,
           "vertex " + std::to_string(conflict) + " reaches two roots");
  } else {
    for (Vertex x = 0; x < graph_.num_vertices(); ++x) {
      if (label[x] != kNoVertex && forest_.root_of(x) != label[x]) {
        Report(invariant::kInComponentContainment,
               "vertex " + std::to_string(x) + " reaches root " +
                   std::to_string(label[x]) + " but lies in the arborescence of " +
                   std::to_string(forest_.root_of(x)));
        break;
      }
    }
  }
  if (record.updated) {
    const std::vector<Vertex> after =
        InComponent(graph_, record.source_root);
    if (after != source_in_before) {
      Report(invariant::kInComponentPreservation,
             "in-component of root " + std::to_string(record.source_root) +
                 " changed from " + std::to_string(source_in_before.size()) +
                 " to " + std::to_string(after.size()) + " vertices");
    }
  }
}

RecourseTrace RunSequence(const ArcSequence& sequence,
                          const EngineOptions& options, const StepHook& hook) {
  IncrementalArborescence engine(sequence.n, options);
  RecourseTrace trace;
  trace.n = sequence.n;
  trace.m = sequence.size();
  trace.records.reserve(sequence.entries.size());
  const double threshold = sequence.n > 0 ? 2.0 / sequence.n : 0.0;
  bool all_rho = true;
  int64_t phase1 = 0;
  int64_t phase2 = 0;
  for (const SequenceEntry& entry : sequence.entries) {
    StepRecord record;
    try {
      record = engine.Insert(entry.arc, entry.rho);
    } catch (const InvariantViolation&) {
      throw;
    } catch (const std::exception& e) {
      throw std::invalid_argument("step " + std::to_string(engine.steps() + 1) +
                                  ": " + e.what());
    }
    if (entry.rho.has_value()) {
      (*entry.rho <= threshold ? phase1 : phase2) += record.deletions;
    } else {
      all_rho = false;
    }
    if (hook) hook(engine.graph(), engine.forest(), record);
    trace.records.push_back(record);
  }
  trace.total_recourse = engine.total_recourse();
  if (all_rho) {
    trace.phase1_recourse = phase1;
    trace.phase2_recourse = phase2;
  }
  trace.violations = engine.violations();
  return trace;
}

int64_t RecourseFromSnapshots(std::span<const std::vector<Vertex>> parents) {
  int64_t total = 0;
  for (size_t i = 1; i < parents.size(); ++i) {
    const auto& before = parents[i - 1];
    const auto& after = parents[i];
    for (size_t v = 0; v < before.size(); ++v) {
      if (before[v] != kNoVertex && after[v] != before[v]) ++total;
    }
  }
  return total;
}

StepStats ComputeStepStats(const Digraph& g, const ArborescenceForest& forest) {
  StepStats stats;
  Vertex conflict = kNoVertex;
  const std::vector<Vertex> label = RootInComponentLabels(forest, g, &conflict);
  const std::vector<Vertex> roots = forest.Roots();
  if (conflict == kNoVertex) {
    std::vector<int> count(g.num_vertices(), 0);
    for (Vertex l : label) {
      if (l != kNoVertex) ++count[l];
    }
    for (Vertex r : roots) stats.root_in_component_sizes.emplace_back(r, count[r]);
  } else {
    for (Vertex r : roots) {
      stats.root_in_component_sizes.emplace_back(
          r, static_cast<int>(InComponent(g, r).size()));
    }
  }
  for (Vertex r : roots) {
    stats.largest_arborescence =
        std::max(stats.largest_arborescence, forest.arborescence_size(r));
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.out_arcs(v).empty() && g.in_arcs(v).empty()) ++stats.isolated_vertices;
  }
  return stats;
}

}  // namespace arbor
