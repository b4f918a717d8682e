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

// Text formats shared by the tools.
//
// Instance file:
//   n m [weighted [initial]]
//   tail head [rho]          -- m lines, unweighted
//   tail head weight         -- m lines, weighted
// Vertices are 0-based and line order is insertion order. For weighted
// instances the root is vertex 0 and the first `initial` arcs (default:
// all m) form the starting graph; the rest arrive one at a time. The rho
// column is optional per file (all lines or none) and is written with
// 17 significant digits.
//
// Trace CSV:
//   step,tail,head,rho,updated,path_len,deletions,forest_size,num_roots,
//   vanishing_arb_size
// with rho empty when absent and booleans as 0/1.

#ifndef ARBOR_INSTANCE_IO_H_
#define ARBOR_INSTANCE_IO_H_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "arbor/engine.h"
#include "arbor/mincost.h"
#include "arbor/sequence.h"

namespace arbor {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Either kind of instance; `weighted` tells which member is filled.
struct Instance {
  bool weighted = false;
  ArcSequence sequence;
  WeightedInstance weighted_instance;
};

Instance ReadInstance(std::istream& in);
Instance ReadInstanceFile(const std::string& path);

void WriteInstance(std::ostream& out, const ArcSequence& sequence);
void WriteInstance(std::ostream& out, const WeightedInstance& instance);

inline constexpr char kTraceHeader[] =
    "step,tail,head,rho,updated,path_len,deletions,forest_size,num_roots,"
    "vanishing_arb_size";

void WriteTraceCsv(std::ostream& out, const RecourseTrace& trace);
// Reads records back; throws ParseError on malformed rows.
std::vector<StepRecord> ReadTraceCsv(std::istream& in);

// Formats with 17 significant digits.
std::string FormatDouble(double value);

}  // namespace arbor

#endif  // ARBOR_INSTANCE_IO_H_
