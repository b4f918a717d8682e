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

#include "arbor/scc.h"

#include <algorithm>
#include <limits>

namespace arbor {

SccDecomposition StronglyConnectedComponents(const Digraph& g) {
  const int n = g.num_vertices();
  constexpr int kUnvisited = -1;
  std::vector<int> index(n, kUnvisited);
  std::vector<int> lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<int> raw_id(n, -1);
  int next_index = 0;
  int num_raw = 0;

  // Explicit DFS frames: vertex plus position in its out-arc list.
  struct Frame {
    Vertex v;
    size_t next_arc;
  };
  std::vector<Frame> frames;

  for (Vertex start = 0; start < n; ++start) {
    if (index[start] != kUnvisited) continue;
    frames.push_back({start, 0});
    index[start] = lowlink[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!frames.empty()) {
      Frame& frame = frames.back();
      const Vertex v = frame.v;
      const auto out = g.out_arcs(v);
      if (frame.next_arc < out.size()) {
        const Vertex w = g.arc(out[frame.next_arc++]).head;
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      if (lowlink[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw_id[w] = num_raw;
        } while (w != v);
        ++num_raw;
      }
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex parent = frames.back().v;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }

  // Renumber by smallest contained vertex: scanning vertices ascending
  // meets each component first at its minimum.
  std::vector<int> renumber(num_raw, -1);
  SccDecomposition out;
  out.component_id.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    int& id = renumber[raw_id[v]];
    if (id < 0) {
      id = static_cast<int>(out.components.size());
      out.components.emplace_back();
    }
    out.component_id[v] = id;
    out.components[id].push_back(v);
  }

  std::vector<char> has_entering(out.components.size(), 0);
  for (const Arc& a : g.arcs()) {
    const int from = out.component_id[a.tail];
    const int to = out.component_id[a.head];
    if (from != to) {
      out.condensation_arcs.emplace_back(from, to);
      has_entering[to] = 1;
    }
  }
  std::sort(out.condensation_arcs.begin(), out.condensation_arcs.end());
  out.condensation_arcs.erase(
      std::unique(out.condensation_arcs.begin(), out.condensation_arcs.end()),
      out.condensation_arcs.end());
  for (int c = 0; c < out.num_components(); ++c) {
    if (!has_entering[c]) out.source_components.push_back(c);
  }
  return out;
}

std::optional<std::vector<int>> CondensationTopologicalOrder(const SccDecomposition& scc) {
  const int k = scc.num_components();
  std::vector<int> in_degree(k, 0);
  std::vector<std::vector<int>> succ(k);
  for (const auto& [from, to] : scc.condensation_arcs) {
    succ[from].push_back(to);
    ++in_degree[to];
  }
  std::vector<int> order;
  for (int c = 0; c < k; ++c) {
    if (in_degree[c] == 0) order.push_back(c);
  }
  for (size_t i = 0; i < order.size(); ++i) {
    for (int d : succ[order[i]]) {
      if (--in_degree[d] == 0) order.push_back(d);
    }
  }
  if (static_cast<int>(order.size()) != k) return std::nullopt;
  return order;
}

bool IsStronglyConnected(const Digraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  return static_cast<int>(ReachableSet(g, 0).size()) == n &&
         static_cast<int>(InComponent(g, 0).size()) == n;
}

}  // namespace arbor
