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

#ifndef ARBOR_SCC_H_
#define ARBOR_SCC_H_

#include <optional>
#include <utility>
#include <vector>

#include "arbor/digraph.h"

namespace arbor {

// Strongly connected components and the condensation DAG. Components are
// numbered by their smallest vertex, ascending; each component's vertex
// list is ascending.
struct SccDecomposition {
  std::vector<int> component_id;
  std::vector<std::vector<Vertex>> components;
  // Sorted, without duplicates.
  std::vector<std::pair<int, int>> condensation_arcs;
  // Components with no entering condensation arc, ascending.
  std::vector<int> source_components;

  int num_components() const { return static_cast<int>(components.size()); }
};

// Iterative Tarjan; safe for large n.
SccDecomposition StronglyConnectedComponents(const Digraph& g);

// A topological order of the condensation, or nullopt if it has a cycle
// (which a correct decomposition never produces).
std::optional<std::vector<int>> CondensationTopologicalOrder(const SccDecomposition& scc);

bool IsStronglyConnected(const Digraph& g);

}  // namespace arbor

#endif  // ARBOR_SCC_H_
