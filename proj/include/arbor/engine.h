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

#ifndef ARBOR_ENGINE_H_
#define ARBOR_ENGINE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arbor/digraph.h"
#include "arbor/forest.h"
#include "arbor/sequence.h"

namespace arbor {

enum class VerifyLevel { kOff, kSampled, kFull };

const char* VerifyLevelName(VerifyLevel level);
// Throws std::invalid_argument for anything but off|sampled|full.
VerifyLevel ParseVerifyLevel(const std::string& name);

// Names of the runtime-checked invariants.
namespace invariant {
inline constexpr char kForestValidity[] = "forest-validity";
inline constexpr char kMaximality[] = "maximality";
inline constexpr char kNoRootPath[] = "no-root-to-root-path";
inline constexpr char kRecourseBound[] = "recourse-bound";
inline constexpr char kInComponentContainment[] = "in-component-containment";
inline constexpr char kInComponentPreservation[] = "in-component-preservation";
inline constexpr char kFeasiblePath[] = "feasible-path-shape";
inline constexpr char kRootBookkeeping[] = "root-bookkeeping";
}  // namespace invariant

struct Violation {
  int step = 0;
  std::string invariant;
  std::string detail;
};

class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(Violation v);
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

struct EngineOptions {
  // kOff: recourse bound and bookkeeping only. kSampled: plus the
  // cardinality oracle every `sample_every` steps. kFull: every invariant
  // after every step.
  VerifyLevel verify = VerifyLevel::kOff;
  int sample_every = 32;
  // When false, violations are collected instead of thrown.
  bool throw_on_violation = true;
};

struct StepRecord {
  int step = 0;  // 1-based
  Arc arc;
  std::optional<double> rho;
  bool updated = false;
  int path_length = 0;
  int deletions = 0;
  int forest_size = 0;
  int num_roots = 0;
  int vanishing_arb_size = 0;
  // Roots joined by the update (source keeps its root status).
  Vertex source_root = kNoVertex;
  Vertex vanished_root = kNoVertex;
};

struct RecourseTrace {
  int n = 0;
  int m = 0;
  std::vector<StepRecord> records;
  int64_t total_recourse = 0;
  // Split at rho <= 2/n; absent when some step has no rho.
  std::optional<int64_t> phase1_recourse;
  std::optional<int64_t> phase2_recourse;
  std::vector<Violation> violations;
};

// Maintains a maximum arborescence forest of a growing digraph: each
// insertion performs at most one path update along a feasible path.
class IncrementalArborescence {
 public:
  explicit IncrementalArborescence(int n, EngineOptions options = {});

  // Inserts an arc and returns its step record. Invalid arcs throw (see
  // Digraph::AddArc) and leave the state unchanged. A duplicate arc is a
  // no-op step.
  StepRecord Insert(const Arc& arc, std::optional<double> rho = std::nullopt);

  const Digraph& graph() const { return graph_; }
  const ArborescenceForest& forest() const { return forest_; }
  int steps() const { return steps_; }
  int64_t total_recourse() const { return total_recourse_; }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  void Report(std::string_view name, std::string detail);
  void VerifyStep(const StepRecord& record,
                  const std::vector<Vertex>& source_in_before);

  EngineOptions options_;
  Digraph graph_;
  ArborescenceForest forest_;
  int steps_ = 0;
  int64_t total_recourse_ = 0;
  std::vector<Violation> violations_;
};

using StepHook = std::function<void(const Digraph&, const ArborescenceForest&,
                                    const StepRecord&)>;

// Runs the whole sequence. Errors from an insertion are rethrown as
// std::invalid_argument naming the step. The hook sees the state after
// every step.
RecourseTrace RunSequence(const ArcSequence& sequence,
                          const EngineOptions& options = {},
                          const StepHook& hook = {});

// Sum of deletions recomputed from consecutive forest snapshots: the
// number of arcs of each forest that are absent from the next.
int64_t RecourseFromSnapshots(std::span<const std::vector<Vertex>> parents);

struct StepStats {
  // (root, |in-component of root|), ascending by root.
  std::vector<std::pair<Vertex, int>> root_in_component_sizes;
  int largest_arborescence = 0;
  int isolated_vertices = 0;
};

StepStats ComputeStepStats(const Digraph& g, const ArborescenceForest& forest);

}  // namespace arbor

#endif  // ARBOR_ENGINE_H_
