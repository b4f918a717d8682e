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

#ifndef ARBOR_SEQUENCE_H_
#define ARBOR_SEQUENCE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "arbor/digraph.h"

namespace arbor {

struct SequenceEntry {
  Arc arc;
  // Arrival value in [0, 1); present for randomly generated sequences.
  std::optional<double> rho;

  friend bool operator==(const SequenceEntry&, const SequenceEntry&) = default;
};

// An ordered arc-arrival sequence on n vertices.
struct ArcSequence {
  int n = 0;
  std::vector<SequenceEntry> entries;
  std::optional<uint64_t> seed;

  int size() const { return static_cast<int>(entries.size()); }
  bool has_rho() const;

  friend bool operator==(const ArcSequence&, const ArcSequence&) = default;
};

inline bool ArcSequence::has_rho() const {
  if (entries.empty()) return false;
  for (const SequenceEntry& e : entries) {
    if (!e.rho.has_value()) return false;
  }
  return true;
}

}  // namespace arbor

#endif  // ARBOR_SEQUENCE_H_
