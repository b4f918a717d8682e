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

#ifndef ARBOR_FOREST_H_
#define ARBOR_FOREST_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arbor/digraph.h"

namespace arbor {

// A forest of arborescences over the vertices of a digraph: every vertex
// has at most one parent arc and parent links never close a cycle. Each
// parentless vertex is the root of one arborescence. Roots and member
// lists are kept up to date by the mutating operations.
class ArborescenceForest {
 public:
  ArborescenceForest() = default;
  // The empty forest: every vertex is its own root.
  explicit ArborescenceForest(int num_vertices);

  // Throws std::invalid_argument if `arcs` do not form an arborescence
  // forest on n vertices (in-degree > 1, cycle, bad endpoint).
  static ArborescenceForest FromArcs(int num_vertices,
                                     std::span<const Arc> arcs);

  int num_vertices() const { return static_cast<int>(parent_.size()); }
  // Number of arcs |F|.
  int size() const { return size_; }
  int num_roots() const { return num_vertices() - size_; }

  bool IsRoot(Vertex v) const { return parent_[v] == kNoVertex; }
  // Tail of v's parent arc, or kNoVertex for roots.
  Vertex parent(Vertex v) const { return parent_[v]; }
  Vertex root_of(Vertex v) const { return root_of_[v]; }
  bool SameArborescence(Vertex a, Vertex b) const {
    return root_of_[a] == root_of_[b];
  }
  // Members of the arborescence rooted at `root`, in no particular order.
  std::span<const Vertex> members(Vertex root) const { return members_[root]; }
  int arborescence_size(Vertex root) const {
    return static_cast<int>(members_[root].size());
  }

  // Ascending.
  std::vector<Vertex> Roots() const;
  // Parent arcs ordered by head.
  std::vector<Arc> Arcs() const;
  bool ContainsArc(const Arc& a) const {
    return parent_[a.head] == a.tail;
  }
  // Vertices on the tree path root_of(v) -> v, inclusive.
  std::vector<Vertex> TreePath(Vertex v) const;

  std::vector<Vertex> parents() const { return parent_; }

  friend bool operator==(const ArborescenceForest& a,
                         const ArborescenceForest& b) {
    return a.parent_ == b.parent_;
  }

 private:
  friend std::vector<Arc> ApplyPathUpdate(ArborescenceForest& forest,
                                          const Digraph& g,
                                          std::span<const Vertex> path);
  friend std::vector<std::string> CheckDerivedState(
      const ArborescenceForest& forest);

  // Recomputes root_of_/members_ for the members of `touched` roots.
  void Reroot(std::span<const Vertex> touched);

  std::vector<Vertex> parent_;
  std::vector<Vertex> root_of_;
  std::vector<std::vector<Vertex>> members_;
  int size_ = 0;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks that `arcs` form an arborescence forest of g: endpoints in range,
// every arc present in g, in-degree at most one, no cycle once directions
// are ignored.
ValidationReport ValidateForest(const Digraph& g, std::span<const Arc> arcs);
// As above for a forest object, plus consistency of roots and members.
ValidationReport ValidateForest(const Digraph& g,
                                const ArborescenceForest& forest);

// Lookup of v's arborescence: its root and ascending member list.
struct ArborescenceView {
  Vertex root = kNoVertex;
  std::vector<Vertex> members;
};
ArborescenceView ArborescenceOf(const ArborescenceForest& forest, Vertex v);

// A root-to-root path whose prefix up to `split_index` follows tree arcs
// of the first root's arborescence and whose remaining vertices lie in
// the arborescence of the last root.
struct FeasiblePath {
  std::vector<Vertex> vertices;
  // Index in `vertices` of the last vertex of the tree-arc prefix.
  int split_index = 0;

  Vertex source() const { return vertices.front(); }
  Vertex target() const { return vertices.back(); }
  std::vector<Arc> Arcs() const;

  friend bool operator==(const FeasiblePath&, const FeasiblePath&) = default;
};

// Empty when `path` satisfies the feasible-path conditions against F
// before the update; otherwise human-readable reasons.
std::vector<std::string> CheckFeasiblePath(const ArborescenceForest& forest,
                                           const Digraph& g,
                                           const FeasiblePath& path);

// Path update along a simple path between two distinct roots: drop the
// parent arcs of the path's internal vertices and add the path's arcs.
// Returns the arcs that left the forest. Throws std::invalid_argument
// (forest unchanged) if the endpoints are not distinct roots, the path
// repeats a vertex, or one of its arcs is missing from g.
std::vector<Arc> ApplyPathUpdate(ArborescenceForest& forest, const Digraph& g,
                                 std::span<const Vertex> path);

struct PathUpdateResult {
  ArborescenceForest forest;
  std::vector<Arc> deleted;
};
PathUpdateResult PathUpdate(const ArborescenceForest& forest, const Digraph& g,
                            std::span<const Vertex> path);

// Searches for a feasible path created by the arc `inserted`, which must
// already be in g. F is expected to be maximum for g without that arc.
//
// The target root is the root nearest to the head of the inserted arc in
// g minus the arc (ties by smallest id), preferring a root other than the
// tail's root. The source is the tail's root, or, when the only reachable
// root is the tail's own, the root nearest to the tail in g minus the arc.
// The root-to-root walk through the inserted arc is loop-erased, cut at
// the last vertex w outside the target arborescence, and re-prefixed with
// the tree path to w. Shortest-path ties go to the smallest next vertex.
std::optional<FeasiblePath> FindFeasiblePath(const ArborescenceForest& forest,
                                             const Digraph& g,
                                             ArcId inserted);

}  // namespace arbor

#endif  // ARBOR_FOREST_H_
