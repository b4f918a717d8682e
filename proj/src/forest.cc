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

#include "arbor/forest.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arbor {
namespace {

std::string ArcString(const Arc& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

// Root of v by following parent links; kNoVertex if a cycle is met.
Vertex WalkToRoot(std::span<const Vertex> parent, Vertex v) {
  const size_t n = parent.size();
  for (size_t steps = 0; steps <= n; ++steps) {
    if (parent[v] == kNoVertex) return v;
    v = parent[v];
  }
  return kNoVertex;
}

}  // namespace

ArborescenceForest::ArborescenceForest(int num_vertices)
    : parent_(num_vertices, kNoVertex),
      root_of_(num_vertices),
      members_(num_vertices) {
  for (Vertex v = 0; v < num_vertices; ++v) {
    root_of_[v] = v;
    members_[v] = {v};
  }
}

ArborescenceForest ArborescenceForest::FromArcs(int num_vertices,
                                                std::span<const Arc> arcs) {
  ArborescenceForest forest(num_vertices);
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= num_vertices || a.head < 0 ||
        a.head >= num_vertices || a.tail == a.head) {
      throw std::invalid_argument("invalid forest arc " + ArcString(a));
    }
    if (forest.parent_[a.head] != kNoVertex) {
      throw std::invalid_argument("vertex " + std::to_string(a.head) +
                                  " has in-degree > 1");
    }
    forest.parent_[a.head] = a.tail;
  }
  forest.size_ = static_cast<int>(arcs.size());
  for (Vertex v = 0; v < num_vertices; ++v) {
    const Vertex r = WalkToRoot(forest.parent_, v);
    if (r == kNoVertex) {
      throw std::invalid_argument("forest arcs contain a cycle through " +
                                  std::to_string(v));
    }
    forest.root_of_[v] = r;
  }
  for (auto& m : forest.members_) m.clear();
  for (Vertex v = 0; v < num_vertices; ++v) {
    forest.members_[forest.root_of_[v]].push_back(v);
  }
  return forest;
}

std::vector<Vertex> ArborescenceForest::Roots() const {
  std::vector<Vertex> roots;
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (IsRoot(v)) roots.push_back(v);
  }
  return roots;
}

std::vector<Arc> ArborescenceForest::Arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(size_);
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (parent_[v] != kNoVertex) arcs.push_back({parent_[v], v});
  }
  return arcs;
}

std::vector<Vertex> ArborescenceForest::TreePath(Vertex v) const {
  std::vector<Vertex> path;
  for (Vertex x = v; x != kNoVertex; x = parent_[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

void ArborescenceForest::Reroot(std::span<const Vertex> touched) {
  std::vector<Vertex> affected;
  for (Vertex r : touched) {
    affected.insert(affected.end(), members_[r].begin(), members_[r].end());
    members_[r].clear();
  }
  constexpr Vertex kPending = -2;
  for (Vertex v : affected) root_of_[v] = kPending;
  // Resolve each pending chain up to a vertex whose root is known.
  std::vector<Vertex> chain;
  for (Vertex v : affected) {
    Vertex x = v;
    while (root_of_[x] == kPending && parent_[x] != kNoVertex) {
      chain.push_back(x);
      x = parent_[x];
    }
    const Vertex root = root_of_[x] == kPending ? x : root_of_[x];
    root_of_[x] = root;
    for (Vertex y : chain) root_of_[y] = root;
    chain.clear();
  }
  for (Vertex v : affected) members_[root_of_[v]].push_back(v);
}

std::vector<Arc> ApplyPathUpdate(ArborescenceForest& forest, const Digraph& g,
                                 std::span<const Vertex> path) {
  const int n = forest.num_vertices();
  if (path.size() < 2) {
    throw std::invalid_argument("update path needs at least two vertices");
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : path) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("update path vertex out of range");
    }
    if (seen[v]) {
      throw std::invalid_argument("update path repeats vertex " +
                                  std::to_string(v));
    }
    seen[v] = 1;
  }
  const Vertex source = path.front();
  const Vertex target = path.back();
  if (!forest.IsRoot(source) || !forest.IsRoot(target)) {
    throw std::invalid_argument("update path endpoints must be roots");
  }
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.HasArc(path[i], path[i + 1])) {
      throw std::invalid_argument("update path arc " +
                                  ArcString({path[i], path[i + 1]}) +
                                  " is not in the graph");
    }
  }

  std::vector<Arc> deleted;
  std::vector<Vertex> touched = {target};
  int new_arcs = 0;
  for (size_t i = 1; i < path.size(); ++i) {
    const Vertex v = path[i];
    const Vertex old_parent = forest.parent_[v];
    if (old_parent == path[i - 1]) continue;
    if (old_parent != kNoVertex) {
      deleted.push_back({old_parent, v});
    } else {
      ++new_arcs;
    }
    touched.push_back(forest.root_of_[v]);
    forest.parent_[v] = path[i - 1];
  }
  forest.size_ += new_arcs;
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  forest.Reroot(touched);
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

PathUpdateResult PathUpdate(const ArborescenceForest& forest, const Digraph& g,
                            std::span<const Vertex> path) {
  PathUpdateResult result{forest, {}};
  result.deleted = ApplyPathUpdate(result.forest, g, path);
  return result;
}

ValidationReport ValidateForest(const Digraph& g, std::span<const Arc> arcs) {
  ValidationReport report;
  const int n = g.num_vertices();
  std::vector<Vertex> parent(n, kNoVertex);
  bool structural = true;
  for (const Arc& a : arcs) {
    if (!g.IsVertex(a.tail) || !g.IsVertex(a.head)) {
      report.violations.push_back("arc " + ArcString(a) +
                                  ": endpoint out of range");
      structural = false;
      continue;
    }
    if (!g.HasArc(a.tail, a.head)) {
      report.violations.push_back("arc " + ArcString(a) +
                                  ": not an arc of the digraph");
    }
    if (parent[a.head] != kNoVertex) {
      report.violations.push_back("vertex " + std::to_string(a.head) +
                                  ": in-degree 2 or more");
      structural = false;
      continue;
    }
    parent[a.head] = a.tail;
  }
  if (!structural) return report;
  // In-degree <= 1 everywhere, so an undirected cycle is a directed one
  // along parent links.
  std::vector<char> state(n, 0);  // 0 new, 1 on current walk, 2 done
  for (Vertex start = 0; start < n; ++start) {
    std::vector<Vertex> walk;
    Vertex x = start;
    while (x != kNoVertex && state[x] == 0) {
      state[x] = 1;
      walk.push_back(x);
      x = parent[x];
    }
    if (x != kNoVertex && state[x] == 1) {
      report.violations.push_back("vertex " + std::to_string(x) +
                                  ": lies on a cycle (undirected cycle)");
    }
    for (Vertex y : walk) state[y] = 2;
  }
  return report;
}

std::vector<std::string> CheckDerivedState(const ArborescenceForest& forest) {
  std::vector<std::string> out;
  const int n = forest.num_vertices();
  int arcs = 0;
  std::vector<int> seen(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (forest.parent_[v] != kNoVertex) ++arcs;
    const Vertex r = WalkToRoot(forest.parent_, v);
    if (r != forest.root_of_[v]) {
      out.push_back("vertex " + std::to_string(v) + ": stale root label");
    }
  }
  if (arcs != forest.size_) out.push_back("arc count out of date");
  for (Vertex r = 0; r < n; ++r) {
    if (!forest.members_[r].empty() && !forest.IsRoot(r)) {
      out.push_back("vertex " + std::to_string(r) +
                    ": non-root owns a member list");
    }
    for (Vertex v : forest.members_[r]) {
      ++seen[v];
      if (forest.root_of_[v] != r) {
        out.push_back("vertex " + std::to_string(v) +
                      ": listed under the wrong root");
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v] != 1) {
      out.push_back("vertex " + std::to_string(v) +
                    ": member lists do not partition the vertices");
    }
  }
  return out;
}

ValidationReport ValidateForest(const Digraph& g,
                                const ArborescenceForest& forest) {
  if (forest.num_vertices() != g.num_vertices()) {
    return {{"forest and digraph disagree on the vertex count"}};
  }
  const std::vector<Arc> arcs = forest.Arcs();
  ValidationReport report = ValidateForest(g, arcs);
  if (report.ok()) {
    for (auto& v : CheckDerivedState(forest)) {
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

ArborescenceView ArborescenceOf(const ArborescenceForest& forest, Vertex v) {
  if (v < 0 || v >= forest.num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  ArborescenceView view;
  view.root = forest.root_of(v);
  const auto m = forest.members(view.root);
  view.members.assign(m.begin(), m.end());
  std::sort(view.members.begin(), view.members.end());
  return view;
}

std::vector<Arc> FeasiblePath::Arcs() const {
  std::vector<Arc> arcs;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    arcs.push_back({vertices[i], vertices[i + 1]});
  }
  return arcs;
}

std::vector<std::string> CheckFeasiblePath(const ArborescenceForest& forest,
                                           const Digraph& g,
                                           const FeasiblePath& path) {
  std::vector<std::string> out;
  const auto& vs = path.vertices;
  if (vs.size() < 2) return {"path has fewer than two vertices"};
  if (path.split_index < 0 ||
      path.split_index >= static_cast<int>(vs.size()) - 1) {
    out.push_back("split index out of range");
    return out;
  }
  for (Vertex v : vs) {
    if (v < 0 || v >= forest.num_vertices()) return {"vertex out of range"};
  }
  const Vertex r = vs.front();
  const Vertex r2 = vs.back();
  if (!forest.IsRoot(r) || !forest.IsRoot(r2) || r == r2) {
    out.push_back("endpoints are not distinct roots");
  }
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    out.push_back("path repeats a vertex");
  }
  for (const Arc& a : path.Arcs()) {
    if (!g.HasArc(a.tail, a.head)) {
      out.push_back("arc " + ArcString(a) + " missing from the digraph");
    }
  }
  for (int i = 0; i < path.split_index; ++i) {
    if (!forest.ContainsArc({vs[i], vs[i + 1]})) {
      out.push_back("prefix arc " + ArcString({vs[i], vs[i + 1]}) +
                    " is not a tree arc");
    }
  }
  for (size_t i = path.split_index + 1; i < vs.size(); ++i) {
    if (forest.root_of(vs[i]) != r2) {
      out.push_back("suffix vertex " + std::to_string(vs[i]) +
                    " outside the target arborescence");
    }
  }
  return out;
}

namespace {

// Shortest path from `from` to `to` in g minus `skip`, given backward hop
// distances to `to`. Each step takes the smallest successor one hop
// closer.
std::vector<Vertex> WalkDown(const Digraph& g, Vertex from,
                             const std::vector<int>& dist_to, ArcId skip) {
  std::vector<Vertex> path = {from};
  Vertex x = from;
  while (dist_to[x] > 0) {
    Vertex best = kNoVertex;
    for (ArcId id : g.out_arcs(x)) {
      if (id == skip) continue;
      const Vertex y = g.arc(id).head;
      if (dist_to[y] == dist_to[x] - 1 && (best == kNoVertex || y < best)) {
        best = y;
      }
    }
    path.push_back(best);
    x = best;
  }
  return path;
}

// Nearest root to `source` among those accepted by `want`, scanning
// breadth-first in direction `dir` (ties by smallest id). The BFS stops
// after the first layer that contains a candidate. Sets *reached_excluded
// when the search passes the root `excluded`.
Vertex NearestRoot(const ArborescenceForest& forest, const Digraph& g,
                   Vertex source, Direction dir, ArcId skip, Vertex excluded,
                   bool* reached_excluded = nullptr) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> layer = {source};
  std::vector<Vertex> next;
  seen[source] = 1;
  while (!layer.empty()) {
    Vertex best = kNoVertex;
    for (Vertex x : layer) {
      if (!forest.IsRoot(x)) continue;
      if (x == excluded) {
        if (reached_excluded != nullptr) *reached_excluded = true;
      } else if (best == kNoVertex || x < best) {
        best = x;
      }
    }
    if (best != kNoVertex) return best;
    next.clear();
    for (Vertex x : layer) {
      const auto arcs =
          dir == Direction::kForward ? g.out_arcs(x) : g.in_arcs(x);
      for (ArcId id : arcs) {
        if (id == skip) continue;
        const Vertex y =
            dir == Direction::kForward ? g.arc(id).head : g.arc(id).tail;
        if (!seen[y]) {
          seen[y] = 1;
          next.push_back(y);
        }
      }
    }
    layer.swap(next);
  }
  return kNoVertex;
}

// Removes cycles from a walk: on revisiting a vertex, cut back to its
// first occurrence.
std::vector<Vertex> LoopErase(const std::vector<Vertex>& walk, int n) {
  std::vector<int> pos(n, -1);
  std::vector<Vertex> out;
  for (Vertex v : walk) {
    if (pos[v] >= 0) {
      for (size_t i = pos[v] + 1; i < out.size(); ++i) pos[out[i]] = -1;
      out.resize(pos[v] + 1);
      continue;
    }
    pos[v] = static_cast<int>(out.size());
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::optional<FeasiblePath> FindFeasiblePath(const ArborescenceForest& forest,
                                             const Digraph& g,
                                             ArcId inserted) {
  if (inserted < 0 || inserted >= g.num_arcs()) {
    throw std::out_of_range("inserted arc id out of range");
  }
  const auto [u, v] = g.arc(inserted);
  const Vertex tail_root = forest.root_of(u);

  bool reaches_tail_root = false;
  Vertex target = NearestRoot(forest, g, v, Direction::kForward, inserted,
                              tail_root, &reaches_tail_root);
  Vertex source = tail_root;
  if (target == kNoVertex) {
    // Only the tail's own root is reachable from v; look for a different
    // root that reaches u.
    if (!reaches_tail_root) return std::nullopt;
    target = tail_root;
    source = NearestRoot(forest, g, u, Direction::kBackward, inserted, target);
    if (source == kNoVertex) return std::nullopt;
  }

  std::vector<Vertex> walk;
  if (source == tail_root) {
    walk = forest.TreePath(u);
  } else {
    walk = WalkDown(g, source,
                    HopDistances(g, u, Direction::kBackward, inserted),
                    inserted);
  }
  const std::vector<Vertex> tail_part =
      WalkDown(g, v, HopDistances(g, target, Direction::kBackward, inserted),
               inserted);
  walk.insert(walk.end(), tail_part.begin(), tail_part.end());
  walk = LoopErase(walk, g.num_vertices());

  int cut = -1;
  for (int i = static_cast<int>(walk.size()) - 1; i >= 0; --i) {
    if (forest.root_of(walk[i]) != target) {
      cut = i;
      break;
    }
  }
  FeasiblePath path;
  path.vertices = forest.TreePath(walk[cut]);
  path.split_index = static_cast<int>(path.vertices.size()) - 1;
  path.vertices.insert(path.vertices.end(), walk.begin() + cut + 1,
                       walk.end());
  return path;
}

}  // namespace arbor
