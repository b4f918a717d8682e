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

#include "arbor/mincost.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace arbor {

WeightedDigraph::WeightedDigraph(int num_vertices, Vertex root)
    : graph_(num_vertices), root_(root) {
  if (num_vertices > 0) graph_.CheckVertex(root);
}

bool WeightedDigraph::AddArc(Vertex tail, Vertex head, Weight weight) {
  if (weight < 0) {
    throw std::invalid_argument("arc weights must be non-negative");
  }
  const bool duplicate = graph_.AddArc(tail, head);
  if (!duplicate) weight_.push_back(weight);
  return duplicate;
}

std::vector<Vertex> WeightedDigraph::UnreachableFromRoot() const {
  std::vector<Vertex> out;
  if (num_vertices() == 0) return out;
  const std::vector<int> dist =
      HopDistances(graph_, root_, Direction::kForward);
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (dist[v] < 0) out.push_back(v);
  }
  return out;
}

WeightedDigraph WeightedInstance::InitialGraph() const {
  WeightedDigraph g(n, root);
  for (int i = 0; i < initial_arcs; ++i) g.AddArc(arcs[i]);
  return g;
}

WeightedDigraph WeightedInstance::FullGraph() const {
  WeightedDigraph g(n, root);
  for (const WeightedArc& a : arcs) g.AddArc(a);
  return g;
}

namespace {

std::string VertexList(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

void RequireReachable(const WeightedDigraph& g) {
  std::vector<Vertex> unreachable = g.UnreachableFromRoot();
  if (!unreachable.empty()) throw UnreachableError(std::move(unreachable));
}

}  // namespace

UnreachableError::UnreachableError(std::vector<Vertex> unreachable)
    : std::invalid_argument("vertices unreachable from the root: " +
                            VertexList(unreachable)),
      unreachable_(std::move(unreachable)) {}

std::vector<Arc> Arborescence::Arcs(const WeightedDigraph& g) const {
  std::vector<Arc> arcs;
  for (ArcId id : parent_arc) {
    if (id != kNoArc) arcs.push_back(g.arc(id));
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

bool IsSpanningArborescence(const WeightedDigraph& g, const Arborescence& tree,
                            Weight* cost) {
  const int n = g.num_vertices();
  if (static_cast<int>(tree.parent_arc.size()) != n) return false;
  Weight total = 0;
  for (Vertex v = 0; v < n; ++v) {
    const ArcId id = tree.parent_arc[v];
    if (v == g.root()) {
      if (id != kNoArc) return false;
      continue;
    }
    if (id < 0 || id >= g.num_arcs() || g.arc(id).head != v) return false;
    total += g.weight(id);
  }
  // Every vertex must reach the root along parent links.
  std::vector<char> state(n, 0);
  if (n > 0) state[g.root()] = 2;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> walk;
    Vertex x = v;
    while (state[x] == 0) {
      state[x] = 1;
      walk.push_back(x);
      x = g.arc(tree.parent_arc[x]).tail;
    }
    if (state[x] == 1) return false;
    for (Vertex y : walk) state[y] = 2;
  }
  if (cost != nullptr) *cost = total;
  return true;
}

// ---------------------------------------------------------------------------
// Chu-Liu/Edmonds with contraction.

namespace {

struct LevelEdge {
  int tail;
  int head;
  Weight weight;
  int id;  // index into the previous level's edge list (or the arc id)
};

// Returns, for each non-root vertex of this level, the index of its chosen
// in-edge in `edges`.
std::vector<int> ContractAndSolve(int n, int root,
                                  const std::vector<LevelEdge>& edges) {
  constexpr Weight kInf = std::numeric_limits<Weight>::max();
  std::vector<Weight> in_weight(n, kInf);
  std::vector<int> in_edge(n, -1);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const LevelEdge& e = edges[i];
    if (e.tail == e.head || e.head == root) continue;
    if (e.weight < in_weight[e.head]) {
      in_weight[e.head] = e.weight;
      in_edge[e.head] = i;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (v != root && in_edge[v] < 0) {
      throw std::logic_error("contracted vertex lost its in-edges");
    }
  }

  // Cycles among the chosen in-edges.
  std::vector<int> comp(n, -1);
  std::vector<int> visit(n, -1);
  std::vector<char> on_cycle(n, 0);
  int num_comp = 0;
  for (int start = 0; start < n; ++start) {
    int x = start;
    while (x != root && visit[x] < 0 && comp[x] < 0) {
      visit[x] = start;
      x = edges[in_edge[x]].tail;
    }
    if (x != root && visit[x] == start && comp[x] < 0) {
      for (int y = x;;) {
        comp[y] = num_comp;
        on_cycle[y] = 1;
        y = edges[in_edge[y]].tail;
        if (y == x) break;
      }
      ++num_comp;
    }
  }
  if (num_comp == 0) {
    std::vector<int> chosen(n, -1);
    for (int v = 0; v < n; ++v) {
      if (v != root) chosen[v] = in_edge[v];
    }
    return chosen;
  }
  for (int v = 0; v < n; ++v) {
    if (comp[v] < 0) comp[v] = num_comp++;
  }

  std::vector<LevelEdge> contracted;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const LevelEdge& e = edges[i];
    const int cu = comp[e.tail];
    const int cv = comp[e.head];
    if (cu == cv || e.head == root) continue;
    contracted.push_back({cu, cv, e.weight - in_weight[e.head], i});
  }
  const std::vector<int> sub = ContractAndSolve(num_comp, comp[root], contracted);

  std::vector<int> chosen(n, -1);
  std::vector<int> entered(num_comp, -1);
  for (int c = 0; c < num_comp; ++c) {
    if (c == comp[root]) continue;
    const int i = contracted[sub[c]].id;
    chosen[edges[i].head] = i;
    entered[c] = edges[i].head;
  }
  for (int v = 0; v < n; ++v) {
    if (on_cycle[v] && entered[comp[v]] != v) chosen[v] = in_edge[v];
  }
  return chosen;
}

}  // namespace

Arborescence ChuLiuEdmonds(const WeightedDigraph& g) {
  RequireReachable(g);
  const int n = g.num_vertices();
  std::vector<LevelEdge> edges;
  edges.reserve(g.num_arcs());
  for (ArcId id = 0; id < g.num_arcs(); ++id) {
    edges.push_back({g.arc(id).tail, g.arc(id).head, g.weight(id), id});
  }
  Arborescence tree;
  tree.parent_arc.assign(n, kNoArc);
  if (n == 0) return tree;
  const std::vector<int> chosen = ContractAndSolve(n, g.root(), edges);
  for (Vertex v = 0; v < n; ++v) {
    if (v == g.root()) continue;
    tree.parent_arc[v] = edges[chosen[v]].id;
    tree.cost += g.weight(tree.parent_arc[v]);
  }
  return tree;
}

Arborescence BruteForceMinArborescence(const WeightedDigraph& g) {
  const int n = g.num_vertices();
  if (n > kBruteForceMaxArbVertices) {
    throw std::invalid_argument("brute force supports at most " +
                                std::to_string(kBruteForceMaxArbVertices) +
                                " vertices");
  }
  RequireReachable(g);
  Arborescence best;
  bool found = false;
  Arborescence current;
  current.parent_arc.assign(n, kNoArc);

  // Depth-first over vertices; a choice is rejected as soon as it closes a
  // parent cycle among the assigned vertices.
  auto closes_cycle = [&](Vertex v, Vertex p) {
    for (Vertex x = p; x != g.root();) {
      if (x == v) return true;
      const ArcId id = current.parent_arc[x];
      if (id == kNoArc) return false;
      x = g.arc(id).tail;
    }
    return false;
  };
  auto assign = [&](auto& self, Vertex v, Weight cost) -> void {
    if (found && cost >= best.cost) return;
    if (v == n) {
      best = current;
      best.cost = cost;
      found = true;
      return;
    }
    if (v == g.root()) {
      self(self, v + 1, cost);
      return;
    }
    for (ArcId id : g.graph().in_arcs(v)) {
      const Vertex p = g.arc(id).tail;
      if (closes_cycle(v, p)) continue;
      current.parent_arc[v] = id;
      self(self, v + 1, cost + g.weight(id));
      current.parent_arc[v] = kNoArc;
    }
  };
  if (n > 0) assign(assign, 0, 0);
  return best;
}

Arborescence BfsArborescence(const WeightedDigraph& g) {
  RequireReachable(g);
  const int n = g.num_vertices();
  Arborescence tree;
  tree.parent_arc.assign(n, kNoArc);
  if (n == 0) return tree;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue = {g.root()};
  seen[g.root()] = 1;
  for (size_t i = 0; i < queue.size(); ++i) {
    for (ArcId id : g.graph().out_arcs(queue[i])) {
      const Vertex y = g.arc(id).head;
      if (seen[y]) continue;
      seen[y] = 1;
      tree.parent_arc[y] = id;
      tree.cost += g.weight(id);
      queue.push_back(y);
    }
  }
  return tree;
}

// ---------------------------------------------------------------------------
// Dual packings.

Weight DualPacking::Value() const {
  Weight total = 0;
  for (const DualSet& s : sets) total += s.multiplier;
  return total;
}

const char* CandidateRuleName(CandidateRule rule) {
  return rule == CandidateRule::kParentTail ? "parent-tail" : "parent-arc";
}

bool IsLaminar(const std::vector<DualSet>& sets, int num_vertices) {
  // Largest first; each set must lie inside the smallest earlier set that
  // holds any of its members, or meet no earlier set at all.
  std::vector<int> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return sets[a].members.size() > sets[b].members.size();
  });
  std::vector<int> owner(num_vertices, -1);
  for (int idx : order) {
    const auto& members = sets[idx].members;
    if (members.empty()) continue;
    const int first = owner[members.front()];
    for (Vertex v : members) {
      if (owner[v] != first) return false;
    }
    if (first >= 0 && sets[first].members.size() == members.size()) {
      // Equal sizes and one owner: the sets coincide, which is laminar.
    }
    for (Vertex v : members) owner[v] = idx;
  }
  return true;
}

CertificateReport VerifyDualCertificate(const WeightedDigraph& g,
                                        const Arborescence& tree,
                                        const DualPacking& packing) {
  CertificateReport report;
  const int n = g.num_vertices();
  Weight tree_cost = 0;
  if (!IsSpanningArborescence(g, tree, &tree_cost)) {
    report.diagnostics.push_back("tree is not a spanning r-arborescence");
    return report;
  }

  bool structure_ok = true;
  std::vector<std::vector<int>> sets_of(n);
  for (int i = 0; i < static_cast<int>(packing.sets.size()); ++i) {
    const DualSet& s = packing.sets[i];
    if (s.multiplier < 0) {
      report.diagnostics.push_back("(a) set " + std::to_string(i) +
                                   " has a negative multiplier");
      structure_ok = false;
    }
    for (Vertex v : s.members) {
      if (v < 0 || v >= n) {
        report.diagnostics.push_back("(a) set " + std::to_string(i) +
                                     " has an out-of-range vertex");
        return report;
      }
      if (v == g.root()) {
        report.diagnostics.push_back("(a) set " + std::to_string(i) +
                                     " contains the root");
        structure_ok = false;
      }
      sets_of[v].push_back(i);
    }
    if (!std::is_sorted(s.members.begin(), s.members.end()) ||
        std::adjacent_find(s.members.begin(), s.members.end()) !=
            s.members.end()) {
      report.diagnostics.push_back("(a) set " + std::to_string(i) +
                                   " is not a sorted vertex set");
      structure_ok = false;
    }
  }
  if (!IsLaminar(packing.sets, n)) {
    report.diagnostics.push_back("(a) family is not laminar");
    structure_ok = false;
  }
  report.laminar = structure_ok;

  // Reduced cost of an arc: weight minus the multipliers of the sets it
  // enters (head inside, tail outside).
  std::vector<char> in_set(packing.sets.size(), 0);
  auto reduced = [&](ArcId id) {
    const Arc& a = g.arc(id);
    Weight r = g.weight(id);
    for (int s : sets_of[a.tail]) in_set[s] = 1;
    for (int s : sets_of[a.head]) {
      if (!in_set[s]) r -= packing.sets[s].multiplier;
    }
    for (int s : sets_of[a.tail]) in_set[s] = 0;
    return r;
  };
  report.reduced_nonnegative = true;
  for (ArcId id = 0; id < g.num_arcs(); ++id) {
    const Weight r = reduced(id);
    if (r < 0) {
      report.reduced_nonnegative = false;
      report.diagnostics.push_back("(b) arc (" + std::to_string(g.arc(id).tail) +
                                   "," + std::to_string(g.arc(id).head) +
                                   ") has reduced cost " + std::to_string(r));
      break;
    }
  }
  report.tree_tight = true;
  for (ArcId id : tree.parent_arc) {
    if (id == kNoArc) continue;
    const Weight r = reduced(id);
    if (r != 0) {
      report.tree_tight = false;
      report.diagnostics.push_back("(c) tree arc (" +
                                   std::to_string(g.arc(id).tail) + "," +
                                   std::to_string(g.arc(id).head) +
                                   ") has reduced cost " + std::to_string(r));
      break;
    }
  }
  const Weight value = packing.Value();
  report.value_matches = value == tree_cost;
  if (!report.value_matches) {
    report.diagnostics.push_back("(d) dual value " + std::to_string(value) +
                                 " differs from tree cost " +
                                 std::to_string(tree_cost));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Tree improvement with dual packing.

namespace {

class CertifiedSolver {
 public:
  CertifiedSolver(const WeightedDigraph& g, const CertifiedOptions& options)
      : g_(g), options_(options), n_(g.num_vertices()) {}

  CertifiedResult Solve() {
    RequireReachable(g_);
    CertifiedResult result;
    tree_ = options_.initial.has_value() ? *options_.initial
                                         : BfsArborescence(g_);
    Weight cost = 0;
    if (!IsSpanningArborescence(g_, tree_, &cost)) {
      throw std::invalid_argument("initial tree is not a spanning arborescence");
    }
    tree_.cost = cost;
    while (true) {
      reduced_.resize(g_.num_arcs());
      for (ArcId id = 0; id < g_.num_arcs(); ++id) reduced_[id] = g_.weight(id);
      found_.clear();
      if (!Sweep()) break;
      Weight new_cost = 0;
      if (!IsSpanningArborescence(g_, tree_, &new_cost)) {
        throw CertificationFailure("update produced a non-arborescence");
      }
      if (new_cost >= tree_.cost) {
        throw CertificationFailure("update did not lower the tree cost (" +
                                   std::to_string(tree_.cost) + " -> " +
                                   std::to_string(new_cost) + ")");
      }
      tree_.cost = new_cost;
      if (++result.restarts > options_.max_restarts) {
        throw CertificationFailure("restart limit reached");
      }
    }
    result.tree = tree_;
    result.packing = MergedPacking();
    const CertificateReport report =
        VerifyDualCertificate(g_, result.tree, result.packing);
    if (!report.ok()) {
      throw CertificationFailure("certificate rejected: " +
                                 report.diagnostics.front());
    }
    return result;
  }

 private:
  Vertex Parent(Vertex v) const { return g_.arc(tree_.parent_arc[v]).tail; }

  // Children-before-parent order of the current tree, root excluded.
  std::vector<Vertex> BottomUpOrder() const {
    std::vector<std::vector<Vertex>> children(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (v != g_.root()) children[Parent(v)].push_back(v);
    }
    std::vector<Vertex> order;
    std::vector<std::pair<Vertex, size_t>> stack = {{g_.root(), 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < children[v].size()) {
        const Vertex c = children[v][next++];
        stack.push_back({c, 0});
        continue;
      }
      if (v != g_.root()) order.push_back(v);
      stack.pop_back();
    }
    return order;
  }

  // Marks the subtree of v in the current tree.
  std::vector<char> Subtree(Vertex v) const {
    std::vector<char> in(n_, 0);
    for (Vertex x = 0; x < n_; ++x) {
      Vertex y = x;
      while (y != g_.root() && y != v) y = Parent(y);
      if (y == v) in[x] = 1;
    }
    return in;
  }

  // Vertices of the subtree with a zero reduced-cost path to v inside the
  // subtree, as backward hop distances (-1 when outside).
  std::vector<int> ZeroDistances(Vertex v, const std::vector<char>& sub) const {
    std::vector<int> dist(n_, -1);
    std::vector<Vertex> queue = {v};
    dist[v] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
      for (ArcId id : g_.graph().in_arcs(queue[i])) {
        const Vertex x = g_.arc(id).tail;
        if (!sub[x] || dist[x] >= 0 || reduced_[id] != 0) continue;
        dist[x] = dist[queue[i]] + 1;
        queue.push_back(x);
      }
    }
    return dist;
  }

  bool Sweep() {
    for (Vertex v : BottomUpOrder()) {
      if (Grow(v)) return true;
    }
    return false;
  }

  // Returns true when the tree changed.
  bool Grow(Vertex v) {
    const std::vector<char> sub = Subtree(v);
    const ArcId parent_arc = tree_.parent_arc[v];
    const Vertex parent_tail = g_.arc(parent_arc).tail;
    while (reduced_[parent_arc] > 0) {
      const std::vector<int> dist = ZeroDistances(v, sub);
      std::vector<Vertex> set;
      std::vector<ArcId> entering;
      for (Vertex x = 0; x < n_; ++x) {
        if (dist[x] < 0) continue;
        set.push_back(x);
        for (ArcId id : g_.graph().in_arcs(x)) {
          if (dist[g_.arc(id).tail] < 0) entering.push_back(id);
        }
      }
      Weight amount = std::numeric_limits<Weight>::max();
      for (ArcId id : entering) {
        const Vertex tail = g_.arc(id).tail;
        const bool candidate =
            sub[tail] || id == parent_arc ||
            (options_.rule == CandidateRule::kParentTail && tail == parent_tail);
        if (candidate) amount = std::min(amount, reduced_[id]);
      }
      if (amount <= 0) {
        throw CertificationFailure(
            "no progress growing the set around vertex " + std::to_string(v) +
            " (candidate rule " + CandidateRuleName(options_.rule) + ")");
      }
      for (ArcId id : entering) reduced_[id] -= amount;
      found_.push_back({set, amount});

      ArcId most_negative = kNoArc;
      for (ArcId id : entering) {
        if (reduced_[id] < 0 &&
            (most_negative == kNoArc || reduced_[id] < reduced_[most_negative])) {
          most_negative = id;
        }
      }
      if (most_negative != kNoArc) {
        Rebuild(set, most_negative);
        return true;
      }
    }
    return false;
  }

  // The subtree part inside `set` is rebuilt as a tight arborescence
  // hanging from the entering arc, entering every recorded set inside
  // `set` exactly once.
  void Rebuild(const std::vector<Vertex>& set, ArcId entering) {
    std::vector<char> in_set(n_, 0);
    for (Vertex x : set) in_set[x] = 1;
    std::vector<std::vector<Vertex>> nodes;
    for (const DualSet& s : found_) {
      if (std::all_of(s.members.begin(), s.members.end(),
                      [&](Vertex x) { return in_set[x] != 0; })) {
        nodes.push_back(s.members);
      }
    }
    std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (nodes.empty() || nodes.front() != set) {
      throw CertificationFailure("current set missing from the family");
    }
    std::vector<int> owner(n_, -1);
    std::vector<int> parent(nodes.size(), -1);
    for (int j = 0; j < static_cast<int>(nodes.size()); ++j) {
      const int up = owner[nodes[j].front()];
      for (Vertex x : nodes[j]) {
        if (owner[x] != up) throw CertificationFailure("family is not laminar");
        owner[x] = j;
      }
      parent[j] = up;
    }
    Expand(0, g_.arc(entering).head, nodes, owner, parent);
    tree_.parent_arc[g_.arc(entering).head] = entering;
  }

  void Expand(int node, Vertex entry,
              const std::vector<std::vector<Vertex>>& nodes,
              const std::vector<int>& owner, const std::vector<int>& parent) {
    // Part of x inside `node`: a child node, or -1 - x for a loose vertex.
    auto part = [&](Vertex x) {
      int c = owner[x];
      if (c == node) return -1 - x;
      while (parent[c] != node) c = parent[c];
      return c;
    };
    std::vector<char> in_node(n_, 0);
    for (Vertex x : nodes[node]) in_node[x] = 1;
    std::map<int, Vertex> entry_of;
    std::vector<Vertex> queue;
    auto visit = [&](int p, Vertex via) {
      entry_of[p] = via;
      if (p < 0) {
        queue.push_back(-1 - p);
      } else {
        for (Vertex x : nodes[p]) queue.push_back(x);
      }
    };
    visit(part(entry), entry);
    for (size_t i = 0; i < queue.size(); ++i) {
      for (ArcId id : g_.graph().out_arcs(queue[i])) {
        const Vertex y = g_.arc(id).head;
        if (!in_node[y] || reduced_[id] != 0) continue;
        const int p = part(y);
        if (entry_of.count(p)) continue;
        tree_.parent_arc[y] = id;
        visit(p, y);
      }
    }
    if (queue.size() != nodes[node].size()) {
      throw CertificationFailure("no tight arborescence inside a dual set");
    }
    for (const auto& [p, via] : entry_of) {
      if (p >= 0) Expand(p, via, nodes, owner, parent);
    }
  }

  DualPacking MergedPacking() const {
    std::map<std::vector<Vertex>, Weight> merged;
    for (const DualSet& s : found_) merged[s.members] += s.multiplier;
    DualPacking packing;
    for (const auto& [members, m] : merged) packing.sets.push_back({members, m});
    packing.laminar = IsLaminar(packing.sets, n_);
    return packing;
  }

  const WeightedDigraph& g_;
  const CertifiedOptions& options_;
  const int n_;
  Arborescence tree_;
  std::vector<Weight> reduced_;
  std::vector<DualSet> found_;
};

}  // namespace

CertifiedResult MinArborescenceWithCertificate(const WeightedDigraph& g,
                                               const CertifiedOptions& options) {
  return CertifiedSolver(g, options).Solve();
}

// ---------------------------------------------------------------------------
// Lower-bound instance and incremental re-solving.

WeightedInstance TriangleAdversary(int n) {
  if (n < 9 || n % 3 != 0) {
    throw std::invalid_argument(
        "triangle adversary needs n >= 9 divisible by 3, got " +
        std::to_string(n));
  }
  const int t = n / 3;
  auto left = [&](int j) { return static_cast<Vertex>(j); };       // 1..t
  auto right = [&](int j) { return static_cast<Vertex>(t + j); };  // 1..t
  // Bottom path from the left corner to the right corner.
  std::vector<Vertex> bottom = {left(t)};
  for (int j = 1; j < t; ++j) bottom.push_back(2 * t + j);
  bottom.push_back(right(t));

  WeightedInstance inst;
  inst.n = n;
  inst.root = 0;
  for (int j = 1; j <= t; ++j) {
    inst.arcs.push_back({{j == 1 ? 0 : left(j - 1), left(j)}, 1});
  }
  for (int j = 1; j <= t; ++j) {
    inst.arcs.push_back({{j == 1 ? 0 : right(j - 1), right(j)}, 1});
  }
  for (size_t i = 0; i + 1 < bottom.size(); ++i) {
    inst.arcs.push_back({{bottom[i], bottom[i + 1]}, 0});
  }
  inst.initial_arcs = static_cast<int>(inst.arcs.size());

  for (size_t i = bottom.size() - 1; i > 0; --i) {
    inst.arcs.push_back({{bottom[i], bottom[i - 1]}, 0});
  }
  // Upward arcs, from the corners towards the apex.
  int next_left = t;   // next upward arc is (left(next_left), left(next_left-1))
  int next_right = t;
  auto up_right = [&] {
    if (next_right <= 1) return;
    inst.arcs.push_back({{right(next_right), right(next_right - 1)}, 0});
    --next_right;
  };
  auto up_left = [&] {
    if (next_left <= 1) return;
    inst.arcs.push_back({{left(next_left), left(next_left - 1)}, 0});
    --next_left;
  };
  up_right();
  while (next_left > 1 || next_right > 1) {
    up_left();
    up_left();
    up_right();
    up_right();
  }
  return inst;
}

IncrementalMinCostResult RunIncrementalMinCost(const WeightedInstance& instance,
                                               MinCostSolver solver,
                                               CandidateRule rule) {
  IncrementalMinCostResult result;
  WeightedDigraph g = instance.InitialGraph();
  std::optional<Arborescence> previous;

  auto solve = [&]() -> Arborescence {
    if (solver == MinCostSolver::kChuLiuEdmonds) return ChuLiuEdmonds(g);
    CertifiedOptions options;
    options.rule = rule;
    if (previous.has_value()) {
      options.initial = *previous;
      // The tree's arc ids stay valid as the graph only grows.
    }
    try {
      return MinArborescenceWithCertificate(g, options).tree;
    } catch (const CertificationFailure&) {
      ++result.certification_failures;
      return ChuLiuEdmonds(g);
    }
  };
  auto arc_set = [&](const Arborescence& t) { return t.Arcs(g); };

  previous = solve();
  result.costs.push_back(previous->cost);
  for (size_t i = instance.initial_arcs; i < instance.arcs.size(); ++i) {
    g.AddArc(instance.arcs[i]);
    const std::vector<Arc> before = arc_set(*previous);
    Arborescence next = solve();
    const std::vector<Arc> after = arc_set(next);
    std::vector<Arc> added;
    std::set_difference(after.begin(), after.end(), before.begin(),
                        before.end(), std::back_inserter(added));
    result.changes.push_back(static_cast<int>(added.size()));
    result.total_recourse += static_cast<int64_t>(added.size());
    result.costs.push_back(next.cost);
    previous = std::move(next);
  }
  return result;
}

}  // namespace arbor
