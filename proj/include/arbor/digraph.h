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

#ifndef ARBOR_DIGRAPH_H_
#define ARBOR_DIGRAPH_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <vector>

namespace arbor {

using Vertex = int32_t;
using ArcId = int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr ArcId kNoArc = -1;

struct Arc {
  Vertex tail = kNoVertex;
  Vertex head = kNoVertex;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::ostream& operator<<(std::ostream& os, const Arc& arc);

// Directed graph on the dense vertex set {0, ..., n-1}. Arcs are ordered
// pairs kept in insertion order; inserting an existing pair is a no-op.
// Adjacency lists hold arc ids, so G^(i) is the prefix of the first i arcs.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int num_vertices);

  int num_vertices() const { return static_cast<int>(out_arcs_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }

  // Appends (tail, head) unless already present. Returns true when the arc
  // was a duplicate. Throws std::out_of_range for endpoints outside [0, n)
  // and std::invalid_argument for self-loops; the graph is left unchanged.
  bool AddArc(Vertex tail, Vertex head);
  bool AddArc(const Arc& arc) { return AddArc(arc.tail, arc.head); }

  bool HasArc(Vertex tail, Vertex head) const;
  // Id of the arc (tail, head), or kNoArc.
  ArcId FindArc(Vertex tail, Vertex head) const;

  const Arc& arc(ArcId id) const { return arcs_[id]; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const ArcId> out_arcs(Vertex v) const { return out_arcs_[v]; }
  std::span<const ArcId> in_arcs(Vertex v) const { return in_arcs_[v]; }

  bool IsVertex(Vertex v) const { return v >= 0 && v < num_vertices(); }
  // Throws std::out_of_range unless v is a vertex.
  void CheckVertex(Vertex v) const;

  // Graph consisting of the first `num_arcs` arcs, in order.
  Digraph Prefix(int num_arcs) const;

  // Checks that adjacency lists and the membership index agree with the
  // arc list. Used by tests.
  bool IsConsistent() const;

 private:
  uint64_t Key(Vertex tail, Vertex head) const {
    return static_cast<uint64_t>(tail) * static_cast<uint64_t>(out_arcs_.size()) +
           static_cast<uint64_t>(head);
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_arcs_;
  std::vector<std::vector<ArcId>> in_arcs_;
  std::unordered_map<uint64_t, ArcId> arc_index_;
};

// Vertices reachable from `source` (source included), ascending. When
// `skip` names an arc id, that arc is treated as absent.
std::vector<Vertex> ReachableSet(const Digraph& g, Vertex source,
                                 ArcId skip = kNoArc);

// Vertices that reach `target` (target included), ascending.
std::vector<Vertex> InComponent(const Digraph& g, Vertex target,
                                ArcId skip = kNoArc);

// Breadth-first hop distances from `source` along arc directions
// (forward) or against them (backward). Unreached vertices get -1.
enum class Direction { kForward, kBackward };
std::vector<int> HopDistances(const Digraph& g, Vertex source, Direction dir,
                              ArcId skip = kNoArc);

}  // namespace arbor

#endif  // ARBOR_DIGRAPH_H_
