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

// Minimum-cost spanning r-arborescences: Chu-Liu/Edmonds, an exhaustive
// oracle, a tree-improvement algorithm that grows a laminar dual packing
// as it goes, and the checker for such packings.

#ifndef ARBOR_MINCOST_H_
#define ARBOR_MINCOST_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arbor/digraph.h"

namespace arbor {

using Weight = int64_t;

struct WeightedArc {
  Arc arc;
  Weight weight = 0;

  friend bool operator==(const WeightedArc&, const WeightedArc&) = default;
};

class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  WeightedDigraph(int num_vertices, Vertex root);

  // Returns true for a duplicate pair (weight left unchanged). Throws
  // std::invalid_argument for negative weights, plus Digraph::AddArc
  // errors.
  bool AddArc(Vertex tail, Vertex head, Weight weight);
  bool AddArc(const WeightedArc& a) {
    return AddArc(a.arc.tail, a.arc.head, a.weight);
  }

  const Digraph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }
  int num_arcs() const { return graph_.num_arcs(); }
  Vertex root() const { return root_; }
  Weight weight(ArcId id) const { return weight_[id]; }
  const Arc& arc(ArcId id) const { return graph_.arc(id); }

  // Vertices not reachable from the root, ascending.
  std::vector<Vertex> UnreachableFromRoot() const;

 private:
  Digraph graph_;
  std::vector<Weight> weight_;
  Vertex root_ = 0;
};

// A weighted instance: a starting graph (the first `initial_arcs` arcs)
// and the arcs that arrive afterwards, in order.
struct WeightedInstance {
  int n = 0;
  Vertex root = 0;
  std::vector<WeightedArc> arcs;
  int initial_arcs = 0;

  WeightedDigraph InitialGraph() const;
  WeightedDigraph FullGraph() const;
};

class UnreachableError : public std::invalid_argument {
 public:
  explicit UnreachableError(std::vector<Vertex> unreachable);
  const std::vector<Vertex>& unreachable() const { return unreachable_; }

 private:
  std::vector<Vertex> unreachable_;
};

// Spanning r-arborescence as one parent arc id per vertex (kNoArc at the
// root).
struct Arborescence {
  std::vector<ArcId> parent_arc;
  Weight cost = 0;

  std::vector<Arc> Arcs(const WeightedDigraph& g) const;
  friend bool operator==(const Arborescence&, const Arborescence&) = default;
};

// True if `tree` spans g from its root using arcs of g; recomputes the
// cost into *cost when given.
bool IsSpanningArborescence(const WeightedDigraph& g, const Arborescence& tree,
                            Weight* cost = nullptr);

// Throws UnreachableError when some vertex is unreachable from the root.
Arborescence ChuLiuEdmonds(const WeightedDigraph& g);

inline constexpr int kBruteForceMaxArbVertices = 8;
// Exhaustive minimum over parent choices; n <= kBruteForceMaxArbVertices.
Arborescence BruteForceMinArborescence(const WeightedDigraph& g);

// Breadth-first spanning r-arborescence (smallest arc id first).
Arborescence BfsArborescence(const WeightedDigraph& g);

struct DualSet {
  std::vector<Vertex> members;  // ascending
  Weight multiplier = 0;
};

struct DualPacking {
  std::vector<DualSet> sets;
  bool laminar = true;

  Weight Value() const;
};

// How the candidate arcs for a dual increase are chosen while growing the
// set S around v: arcs into S from inside v's subtree, plus either every
// arc leaving the tail of v's parent arc (kParentTail) or only the parent
// arc itself (kParentArc).
enum class CandidateRule { kParentTail, kParentArc };

const char* CandidateRuleName(CandidateRule rule);

struct CertifiedOptions {
  CandidateRule rule = CandidateRule::kParentArc;
  // Starting arborescence; a BFS tree when absent.
  std::optional<Arborescence> initial;
  int max_restarts = 1 << 20;
};

struct CertifiedResult {
  Arborescence tree;
  DualPacking packing;
  int restarts = 0;
};

class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tree-improvement with dual packing. Sweeps the current tree bottom-up;
// at each vertex v it repeatedly takes S = the vertices of v's subtree
// with a zero reduced-cost path to v, lowers the reduced cost of every
// arc entering S by the cheapest candidate arc, and records (S, amount).
// An arc entering S that turns negative re-hangs the subtree along the
// zero path, after which the sweep restarts from the original costs.
//
// Throws UnreachableError, or CertificationFailure when the loop stalls,
// the tree cost fails to drop on a restart, or the final packing does not
// verify.
CertifiedResult MinArborescenceWithCertificate(
    const WeightedDigraph& g, const CertifiedOptions& options = {});

struct CertificateReport {
  bool laminar = false;           // (a) laminar, multipliers >= 0, no root
  bool reduced_nonnegative = false;  // (b)
  bool tree_tight = false;        // (c)
  bool value_matches = false;     // (d)
  std::vector<std::string> diagnostics;

  bool ok() const {
    return laminar && reduced_nonnegative && tree_tight && value_matches;
  }
};

// Checks the LP-duality optimality conditions for `tree` from scratch.
CertificateReport VerifyDualCertificate(const WeightedDigraph& g,
                                        const Arborescence& tree,
                                        const DualPacking& packing);

// Laminarity of a set family in O(total size * log).
bool IsLaminar(const std::vector<DualSet>& sets, int num_vertices);

// Triangle instance with 0/1 weights on n = 3t vertices (t >= 3): root
// apex 0, left side 1..t, right side t+1..2t, bottom interior
// 2t+1..3t-1. The start graph holds the downward side paths (weight 1)
// and the bottom path from the left corner to the right corner
// (weight 0). Arrivals (all weight 0): the reversed bottom, then upward
// side arcs from the corners, one on the right and then two per side
// alternately, so each pair after the first forces the bottom to turn.
WeightedInstance TriangleAdversary(int n);

enum class MinCostSolver { kChuLiuEdmonds, kCertified };

struct IncrementalMinCostResult {
  std::vector<Weight> costs;      // after the start graph and each arrival
  std::vector<int> changes;       // |T_i \ T_{i-1}| per arrival
  int64_t total_recourse = 0;
  int certification_failures = 0;  // certified solver fell back to CLE
};

// Re-solves after every arrival. The certified solver warm-starts from
// the previous tree and falls back to Chu-Liu/Edmonds on failure.
IncrementalMinCostResult RunIncrementalMinCost(const WeightedInstance& instance,
                                               MinCostSolver solver,
                                               CandidateRule rule =
                                                   CandidateRule::kParentArc);

}  // namespace arbor

#endif  // ARBOR_MINCOST_H_
