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

#include <random>
#include <stdexcept>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_graphs.h"

namespace arbor {
namespace {

using ::testing::ElementsAre;

TEST(DigraphTest, AddArcAppends) {
  Digraph g(2);
  EXPECT_FALSE(g.AddArc(0, 1));
  ASSERT_EQ(g.num_arcs(), 1);
  EXPECT_EQ(g.arc(0), (Arc{0, 1}));
}

TEST(DigraphTest, DuplicateIsReportedAndIgnored) {
  Digraph g(2);
  g.AddArc(0, 1);
  EXPECT_TRUE(g.AddArc(0, 1));
  EXPECT_EQ(g.num_arcs(), 1);
  EXPECT_EQ(g.out_arcs(0).size(), 1u);
}

TEST(DigraphTest, InsertionOrderIsKept) {
  Digraph g(4);
  const std::vector<Arc> seq = {{1, 2}, {2, 1}, {3, 2}, {2, 3}, {0, 1}, {1, 0}};
  for (const Arc& a : seq) g.AddArc(a);
  ASSERT_EQ(g.num_arcs(), 6);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(g.arc(i), seq[i]);
  EXPECT_TRUE(g.IsConsistent());
}

TEST(DigraphTest, RejectsBadArcs) {
  Digraph g(3);
  EXPECT_THROW(g.AddArc(0, 3), std::out_of_range);
  EXPECT_THROW(g.AddArc(-1, 0), std::out_of_range);
  EXPECT_THROW(g.AddArc(1, 1), std::invalid_argument);
  EXPECT_EQ(g.num_arcs(), 0);
}

TEST(DigraphTest, FindArcAndPrefix) {
  Digraph g(3);
  g.AddArc(0, 1);
  g.AddArc(1, 2);
  EXPECT_EQ(g.FindArc(1, 2), 1);
  EXPECT_EQ(g.FindArc(2, 1), kNoArc);
  const Digraph p = g.Prefix(1);
  EXPECT_EQ(p.num_arcs(), 1);
  EXPECT_FALSE(p.HasArc(1, 2));
  EXPECT_TRUE(p.IsConsistent());
}

TEST(ReachabilityTest, IsolatedVertex) {
  Digraph g(4);
  EXPECT_THAT(ReachableSet(g, 3), ElementsAre(3));
  EXPECT_THAT(InComponent(g, 0), ElementsAre(0));
}

TEST(ReachabilityTest, Chain) {
  Digraph g(3);
  g.AddArc(0, 1);
  g.AddArc(1, 2);
  EXPECT_THAT(ReachableSet(g, 0), ElementsAre(0, 1, 2));
  EXPECT_THAT(InComponent(g, 2), ElementsAre(0, 1, 2));
  EXPECT_THAT(InComponent(g, 0), ElementsAre(0));
}

TEST(ReachabilityTest, TwoCycle) {
  Digraph g(2);
  g.AddArc(0, 1);
  g.AddArc(1, 0);
  EXPECT_THAT(ReachableSet(g, 1), ElementsAre(0, 1));
}

TEST(ReachabilityTest, SkippedArcIsNotUsed) {
  Digraph g(3);
  g.AddArc(0, 1);
  g.AddArc(1, 2);
  EXPECT_THAT(ReachableSet(g, 0, g.FindArc(1, 2)), ElementsAre(0, 1));
  EXPECT_THAT(InComponent(g, 2, g.FindArc(0, 1)), ElementsAre(1, 2));
}

TEST(ReachabilityTest, RejectsOutOfRange) {
  Digraph g(2);
  EXPECT_THROW(ReachableSet(g, 2), std::out_of_range);
  EXPECT_THROW(InComponent(g, -1), std::out_of_range);
}

TEST(ReachabilityTest, HopDistances) {
  Digraph g(4);
  g.AddArc(0, 1);
  g.AddArc(1, 2);
  g.AddArc(0, 2);
  EXPECT_THAT(HopDistances(g, 0, Direction::kForward), ElementsAre(0, 1, 1, -1));
  EXPECT_THAT(HopDistances(g, 2, Direction::kBackward),
              ElementsAre(1, 1, 0, -1));
}

// Reachability and in-components agree with the transitive closure.
TEST(ReachabilityProperty, MatchesClosure) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Digraph g = testing::RandomDigraph(n, static_cast<int>(rng() % 20), rng);
    const auto reach = testing::Closure(g);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Vertex> out, in;
      for (Vertex u = 0; u < n; ++u) {
        if (reach[v][u]) out.push_back(u);
        if (reach[u][v]) in.push_back(u);
      }
      ASSERT_EQ(ReachableSet(g, v), out);
      ASSERT_EQ(InComponent(g, v), in);
    }
  }
}

}  // namespace
}  // namespace arbor
