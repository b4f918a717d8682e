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

#include "arbor/arrivals.h"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arbor {
namespace {

// 53 random bits scaled into [0, 1). Avoids the implementation-defined
// behaviour of std::uniform_real_distribution.
double UnitDouble(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ArcSequence UniformRandomSequence(int n, int64_t m, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const int64_t pairs = static_cast<int64_t>(n) * (n - 1);
  if (m < 0 || m > pairs) {
    throw std::invalid_argument("m = " + std::to_string(m) +
                                " outside [0, n(n-1)] = [0, " +
                                std::to_string(pairs) + "]");
  }
  std::mt19937_64 rng(seed);
  // Max-heap holding the m smallest (value, pair index) seen so far.
  using Item = std::pair<double, int64_t>;
  std::priority_queue<Item> heap;
  int64_t index = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const Item item{UnitDouble(rng), index++};
      if (static_cast<int64_t>(heap.size()) < m) {
        heap.push(item);
      } else if (m > 0 && item < heap.top()) {
        heap.pop();
        heap.push(item);
      }
    }
  }
  std::vector<Item> chosen;
  chosen.reserve(heap.size());
  while (!heap.empty()) {
    chosen.push_back(heap.top());
    heap.pop();
  }
  std::reverse(chosen.begin(), chosen.end());

  ArcSequence seq;
  seq.n = n;
  seq.seed = seed;
  seq.entries.reserve(chosen.size());
  for (const auto& [value, idx] : chosen) {
    const int u = static_cast<int>(idx / (n - 1));
    int v = static_cast<int>(idx % (n - 1));
    if (v >= u) ++v;
    seq.entries.push_back({{u, v}, value});
  }
  return seq;
}

ArcSequence BidirectedPathAdversary(int n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("adversary needs an even n >= 4, got " +
                                std::to_string(n));
  }
  ArcSequence seq;
  seq.n = n;
  auto push_pair = [&](Vertex from, Vertex to) {
    seq.entries.push_back({{from, to}, std::nullopt});
    seq.entries.push_back({{to, from}, std::nullopt});
  };
  Vertex left = n / 2 - 1;
  Vertex right = n / 2;
  push_pair(left, right);
  while (left > 0 || right < n - 1) {
    if (right < n - 1) {
      push_pair(right + 1, right);
      ++right;
    }
    if (left > 0) {
      push_pair(left - 1, left);
      --left;
    }
  }
  return seq;
}

int PhaseSplitIndex(const ArcSequence& sequence, double p) {
  int index = 0;
  for (int i = 0; i < sequence.size(); ++i) {
    const auto& rho = sequence.entries[i].rho;
    if (!rho.has_value()) {
      throw std::invalid_argument("entry " + std::to_string(i + 1) +
                                  " has no arrival value");
    }
    if (*rho <= p) index = i + 1;
  }
  return index;
}

}  // namespace arbor
