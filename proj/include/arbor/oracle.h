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

#ifndef ARBOR_ORACLE_H_
#define ARBOR_ORACLE_H_

#include <cstdint>
#include <vector>

#include "arbor/digraph.h"
#include "arbor/forest.h"

namespace arbor {

// Size of a maximum arborescence forest: n minus the number of source
// components of the condensation (one root per source component).
int MaxForestCardinality(const Digraph& g);

inline constexpr int kBruteForceMaxVertices = 10;

struct BruteForceResult {
  int size = 0;
  // A maximum forest.
  std::vector<Arc> witness;
  // Number of distinct maximum forests.
  int64_t num_maximum = 0;
};

// Exhaustive search over parent assignments with acyclicity pruning.
// Throws std::invalid_argument when n exceeds kBruteForceMaxVertices.
BruteForceResult BruteForceMaxForest(const Digraph& g);

// True iff no root of F reaches another root of F in g. Throws
// std::invalid_argument if F is not a valid forest of g.
bool IsMaximum(const ArborescenceForest& forest, const Digraph& g);

// For each vertex, the root whose in-component contains it, or kNoVertex.
// Assumes the in-components of distinct roots are disjoint, which holds
// for maximum forests; a vertex reaching two roots is reported through
// `conflict` (set to that vertex) and the labelling stops.
std::vector<Vertex> RootInComponentLabels(const ArborescenceForest& forest,
                                          const Digraph& g,
                                          Vertex* conflict = nullptr);

}  // namespace arbor

#endif  // ARBOR_ORACLE_H_
