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

#ifndef ARBOR_ARRIVALS_H_
#define ARBOR_ARRIVALS_H_

#include <cstdint>

#include "arbor/sequence.h"

namespace arbor {

// Uniform random arrivals without replacement. Every ordered pair (u, v),
// u != v, gets an independent uniform value in [0, 1) from a generator
// seeded with `seed`; the m pairs with the smallest values are returned
// in ascending value order with their values attached. Pairs are visited
// in row-major order (u, then v), so the result for a given (n, seed) is
// a prefix of the result for any larger m. Throws std::invalid_argument
// when m > n(n-1) or m < 0.
ArcSequence UniformRandomSequence(int n, int64_t m, uint64_t seed);

// The non-adaptive lower-bound sequence on a path v_1..v_n (vertex i-1
// is v_i): the middle arc (v_{n/2}, v_{n/2+1}) and its reverse, then
// alternately extending the path right and left. Each extension arc
// points from the new endpoint into the path and is followed by its
// reverse. Requires even n >= 4; 2(n-1) arcs.
ArcSequence BidirectedPathAdversary(int n);

// Largest i such that the i-th value is <= p (0 if none). Throws
// std::invalid_argument if some entry lacks a value.
int PhaseSplitIndex(const ArcSequence& sequence, double p);

// Sum of the forced recourse on BidirectedPathAdversary(n).
inline int64_t AdversaryForcedRecourse(int n) {
  return static_cast<int64_t>(n - 2) * (n - 1) / 2;
}

}  // namespace arbor

#endif  // ARBOR_ARRIVALS_H_
