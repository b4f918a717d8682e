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

#include "arbor/oracle.h"

#include <stdexcept>
#include <string>

#include "arbor/scc.h"

namespace arbor {

int MaxForestCardinality(const Digraph& g) {
  const SccDecomposition scc = StronglyConnectedComponents(g);
  return g.num_vertices() - static_cast<int>(scc.source_components.size());
}

namespace {

class BruteForce {
 public:
  explicit BruteForce(const Digraph& g)
      : g_(g), n_(g.num_vertices()), parent_(n_, kNoVertex) {}

  BruteForceResult Run() {
    Assign(0, 0);
    return std::move(result_);
  }

 private:
  // True if giving v the parent p closes a parent cycle among the
  // vertices assigned so far.
  bool ClosesCycle(Vertex v, Vertex p) const {
    for (Vertex x = p; x != kNoVertex; x = parent_[x]) {
      if (x == v) return true;
    }
    return false;
  }

  void Assign(Vertex v, int arcs) {
    // Remaining vertices can add at most one arc each.
    if (arcs + (n_ - v) < result_.size) return;
    if (v == n_) {
      if (arcs > result_.size) {
        result_.size = arcs;
        result_.num_maximum = 0;
      }
      if (arcs == result_.size) {
        if (result_.num_maximum == 0) {
          result_.witness.clear();
          for (Vertex x = 0; x < n_; ++x) {
            if (parent_[x] != kNoVertex) result_.witness.push_back({parent_[x], x});
          }
        }
        ++result_.num_maximum;
      }
      return;
    }
    for (ArcId id : g_.in_arcs(v)) {
      const Vertex p = g_.arc(id).tail;
      if (ClosesCycle(v, p)) continue;
      parent_[v] = p;
      Assign(v + 1, arcs + 1);
      parent_[v] = kNoVertex;
    }
    Assign(v + 1, arcs);
  }

  const Digraph& g_;
  const int n_;
  std::vector<Vertex> parent_;
  BruteForceResult result_;
};

}  // namespace

BruteForceResult BruteForceMaxForest(const Digraph& g) {
  if (g.num_vertices() > kBruteForceMaxVertices) {
    throw std::invalid_argument(
        "brute force supports at most " +
        std::to_string(kBruteForceMaxVertices) + " vertices");
  }
  return BruteForce(g).Run();
}

bool IsMaximum(const ArborescenceForest& forest, const Digraph& g) {
  const ValidationReport report = ValidateForest(g, forest);
  if (!report.ok()) {
    throw std::invalid_argument("not a valid forest: " +
                                report.violations.front());
  }
  const std::vector<Vertex> roots = forest.Roots();
  std::vector<int> mark(g.num_vertices(), -1);
  std::vector<Vertex> queue;
  for (Vertex r : roots) {
    queue.assign(1, r);
    mark[r] = r;
    for (size_t i = 0; i < queue.size(); ++i) {
      for (ArcId id : g.out_arcs(queue[i])) {
        const Vertex y = g.arc(id).head;
        if (mark[y] == r) continue;
        if (forest.IsRoot(y)) return false;
        mark[y] = r;
        queue.push_back(y);
      }
    }
  }
  return true;
}

std::vector<Vertex> RootInComponentLabels(const ArborescenceForest& forest,
                                          const Digraph& g, Vertex* conflict) {
  std::vector<Vertex> label(g.num_vertices(), kNoVertex);
  if (conflict != nullptr) *conflict = kNoVertex;
  std::vector<Vertex> queue;
  for (Vertex r : forest.Roots()) {
    if (label[r] != kNoVertex) {
      if (conflict != nullptr) *conflict = r;
      return label;
    }
    label[r] = r;
    queue.assign(1, r);
    for (size_t i = 0; i < queue.size(); ++i) {
      for (ArcId id : g.in_arcs(queue[i])) {
        const Vertex x = g.arc(id).tail;
        if (label[x] == r) continue;
        if (label[x] != kNoVertex) {
          if (conflict != nullptr) *conflict = x;
          return label;
        }
        label[x] = r;
        queue.push_back(x);
      }
    }
  }
  return label;
}

}  // namespace arbor
