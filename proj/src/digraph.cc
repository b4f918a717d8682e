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

#include "arbor/digraph.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arbor {

std::ostream& operator<<(std::ostream& os, const Arc& arc) {
  return os << "(" << arc.tail << "," << arc.head << ")";
}

Digraph::Digraph(int num_vertices) {
  if (num_vertices < 0) {
    throw std::invalid_argument("vertex count must be non-negative");
  }
  out_arcs_.resize(num_vertices);
  in_arcs_.resize(num_vertices);
}

void Digraph::CheckVertex(Vertex v) const {
  if (!IsVertex(v)) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside [0, " + std::to_string(num_vertices()) +
                            ")");
  }
}

bool Digraph::AddArc(Vertex tail, Vertex head) {
  CheckVertex(tail);
  CheckVertex(head);
  if (tail == head) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(tail));
  }
  const auto [it, inserted] =
      arc_index_.try_emplace(Key(tail, head), static_cast<ArcId>(arcs_.size()));
  if (!inserted) return true;
  const ArcId id = it->second;
  arcs_.push_back({tail, head});
  out_arcs_[tail].push_back(id);
  in_arcs_[head].push_back(id);
  return false;
}

bool Digraph::HasArc(Vertex tail, Vertex head) const {
  return FindArc(tail, head) != kNoArc;
}

ArcId Digraph::FindArc(Vertex tail, Vertex head) const {
  if (!IsVertex(tail) || !IsVertex(head)) return kNoArc;
  const auto it = arc_index_.find(Key(tail, head));
  return it == arc_index_.end() ? kNoArc : it->second;
}

Digraph Digraph::Prefix(int num_arcs) const {
  if (num_arcs < 0 || num_arcs > this->num_arcs()) {
    throw std::out_of_range("prefix length out of range");
  }
  Digraph g(num_vertices());
  for (int i = 0; i < num_arcs; ++i) g.AddArc(arcs_[i]);
  return g;
}

bool Digraph::IsConsistent() const {
  if (arc_index_.size() != arcs_.size()) return false;
  size_t out_total = 0;
  size_t in_total = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) {
    for (ArcId id : out_arcs_[v]) {
      if (arcs_[id].tail != v) return false;
    }
    for (ArcId id : in_arcs_[v]) {
      if (arcs_[id].head != v) return false;
    }
    out_total += out_arcs_[v].size();
    in_total += in_arcs_[v].size();
  }
  if (out_total != arcs_.size() || in_total != arcs_.size()) return false;
  for (ArcId id = 0; id < num_arcs(); ++id) {
    if (FindArc(arcs_[id].tail, arcs_[id].head) != id) return false;
  }
  return true;
}

std::vector<int> HopDistances(const Digraph& g, Vertex source, Direction dir,
                              ArcId skip) {
  g.CheckVertex(source);
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<Vertex> queue = {source};
  dist[source] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    const Vertex x = queue[i];
    const auto arcs =
        dir == Direction::kForward ? g.out_arcs(x) : g.in_arcs(x);
    for (ArcId id : arcs) {
      if (id == skip) continue;
      const Vertex y =
          dir == Direction::kForward ? g.arc(id).head : g.arc(id).tail;
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

namespace {

std::vector<Vertex> Reached(const std::vector<int>& dist) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(dist.size()); ++v) {
    if (dist[v] >= 0) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<Vertex> ReachableSet(const Digraph& g, Vertex source,
                                 ArcId skip) {
  return Reached(HopDistances(g, source, Direction::kForward, skip));
}

std::vector<Vertex> InComponent(const Digraph& g, Vertex target, ArcId skip) {
  return Reached(HopDistances(g, target, Direction::kBackward, skip));
}

}  // namespace arbor
