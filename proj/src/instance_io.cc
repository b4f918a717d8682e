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

#include "arbor/instance_io.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace arbor {
namespace {

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int64_t ParseInt(const std::string& s, int line) {
  size_t pos = 0;
  int64_t value = 0;
  try {
    value = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
  if (pos != s.size()) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
  return value;
}

double ParseReal(const std::string& s, int line) {
  size_t pos = 0;
  double value = 0;
  try {
    value = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + s + "'");
  }
  if (pos != s.size()) {
    throw ParseError(line, "expected a number, got '" + s + "'");
  }
  return value;
}

// Next non-blank line that is not a '#' comment.
bool NextLine(std::istream& in, std::string& line, int& number) {
  while (std::getline(in, line)) {
    ++number;
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Instance ReadInstance(std::istream& in) {
  std::string line;
  int number = 0;
  if (!NextLine(in, line, number)) throw ParseError(number, "empty input");
  const std::vector<std::string> header = Tokens(line);
  if (header.size() < 2 || header.size() > 4) {
    throw ParseError(number, "header must be 'n m [weighted [initial]]'");
  }
  const int64_t n = ParseInt(header[0], number);
  const int64_t m = ParseInt(header[1], number);
  if (n < 0 || n > (1 << 30)) throw ParseError(number, "bad vertex count");
  if (m < 0) throw ParseError(number, "negative arc count");
  Instance result;
  if (header.size() >= 3) {
    if (header[2] != "weighted") {
      throw ParseError(number, "unknown header field '" + header[2] + "'");
    }
    result.weighted = true;
  }
  int64_t initial = m;
  if (header.size() == 4) {
    initial = ParseInt(header[3], number);
    if (initial < 0 || initial > m) {
      throw ParseError(number, "initial arc count outside [0, m]");
    }
  }

  auto check_vertex = [&](int64_t v) {
    if (v < 0 || v >= n) {
      throw ParseError(number, "vertex " + std::to_string(v) +
                                   " out of range [0, " + std::to_string(n) +
                                   ")");
    }
    return static_cast<Vertex>(v);
  };

  std::optional<bool> with_rho;
  for (int64_t i = 0; i < m; ++i) {
    if (!NextLine(in, line, number)) {
      throw ParseError(number, "expected " + std::to_string(m) +
                                   " arcs, found " + std::to_string(i));
    }
    const std::vector<std::string> tok = Tokens(line);
    if (tok.size() < 2 || tok.size() > 3) {
      throw ParseError(number, "expected 'tail head [value]'");
    }
    const Vertex tail = check_vertex(ParseInt(tok[0], number));
    const Vertex head = check_vertex(ParseInt(tok[1], number));
    if (tail == head) throw ParseError(number, "self-loop");
    if (result.weighted) {
      if (tok.size() != 3) throw ParseError(number, "missing weight");
      const int64_t w = ParseInt(tok[2], number);
      if (w < 0) throw ParseError(number, "negative weight");
      result.weighted_instance.arcs.push_back({{tail, head}, w});
      continue;
    }
    const bool has = tok.size() == 3;
    if (with_rho.has_value() && *with_rho != has) {
      throw ParseError(number, "arrival values must be given on all lines or none");
    }
    with_rho = has;
    std::optional<double> rho;
    if (has) {
      rho = ParseReal(tok[2], number);
      if (!(*rho >= 0.0 && *rho < 1.0)) {
        throw ParseError(number, "arrival value outside [0, 1)");
      }
    }
    result.sequence.entries.push_back({{tail, head}, rho});
  }
  if (NextLine(in, line, number)) {
    throw ParseError(number, "trailing content after " + std::to_string(m) +
                                 " arcs");
  }
  if (result.weighted) {
    result.weighted_instance.n = static_cast<int>(n);
    result.weighted_instance.root = 0;
    result.weighted_instance.initial_arcs = static_cast<int>(initial);
    if (n == 0) throw ParseError(number, "weighted instance needs a root");
  } else {
    result.sequence.n = static_cast<int>(n);
  }
  return result;
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return ReadInstance(in);
}

std::string FormatDouble(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void WriteInstance(std::ostream& out, const ArcSequence& sequence) {
  const bool rho = sequence.has_rho();
  out << sequence.n << ' ' << sequence.size() << '\n';
  for (const SequenceEntry& e : sequence.entries) {
    out << e.arc.tail << ' ' << e.arc.head;
    if (rho) out << ' ' << FormatDouble(*e.rho);
    out << '\n';
  }
}

void WriteInstance(std::ostream& out, const WeightedInstance& instance) {
  if (instance.root != 0) {
    throw std::invalid_argument("the file format fixes the root at vertex 0");
  }
  out << instance.n << ' ' << instance.arcs.size() << " weighted "
      << instance.initial_arcs << '\n';
  for (const WeightedArc& a : instance.arcs) {
    out << a.arc.tail << ' ' << a.arc.head << ' ' << a.weight << '\n';
  }
}

void WriteTraceCsv(std::ostream& out, const RecourseTrace& trace) {
  out << kTraceHeader << '\n';
  for (const StepRecord& r : trace.records) {
    out << r.step << ',' << r.arc.tail << ',' << r.arc.head << ','
        << (r.rho.has_value() ? FormatDouble(*r.rho) : "") << ','
        << (r.updated ? 1 : 0) << ',' << r.path_length << ',' << r.deletions
        << ',' << r.forest_size << ',' << r.num_roots << ','
        << r.vanishing_arb_size << '\n';
  }
}

std::vector<StepRecord> ReadTraceCsv(std::istream& in) {
  std::string line;
  int number = 0;
  if (!std::getline(in, line)) throw ParseError(0, "empty trace");
  ++number;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTraceHeader) throw ParseError(number, "unexpected trace header");
  std::vector<StepRecord> records;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string field;
    std::istringstream row(line);
    while (std::getline(row, field, ',')) f.push_back(field);
    if (!line.empty() && line.back() == ',') f.push_back("");
    if (f.size() != 10) throw ParseError(number, "expected 10 fields");
    StepRecord r;
    r.step = static_cast<int>(ParseInt(f[0], number));
    r.arc = {static_cast<Vertex>(ParseInt(f[1], number)),
             static_cast<Vertex>(ParseInt(f[2], number))};
    if (!f[3].empty()) r.rho = ParseReal(f[3], number);
    const int64_t updated = ParseInt(f[4], number);
    if (updated != 0 && updated != 1) throw ParseError(number, "bad flag");
    r.updated = updated == 1;
    r.path_length = static_cast<int>(ParseInt(f[5], number));
    r.deletions = static_cast<int>(ParseInt(f[6], number));
    r.forest_size = static_cast<int>(ParseInt(f[7], number));
    r.num_roots = static_cast<int>(ParseInt(f[8], number));
    r.vanishing_arb_size = static_cast<int>(ParseInt(f[9], number));
    records.push_back(r);
  }
  return records;
}

}  // namespace arbor
