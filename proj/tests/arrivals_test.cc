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

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "arbor/engine.h"
#include "arbor/oracle.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace arbor {
namespace {

using ::testing::ElementsAre;

TEST(UniformRandomSequenceTest, TwoVertices) {
  const ArcSequence s = UniformRandomSequence(2, 2, 99);
  ASSERT_EQ(s.size(), 2);
  std::set<Arc> arcs = {s.entries[0].arc, s.entries[1].arc};
  EXPECT_EQ(arcs, (std::set<Arc>{{0, 1}, {1, 0}}));
}

TEST(UniformRandomSequenceTest, ExhaustsAllPairsInValueOrder) {
  const ArcSequence s = UniformRandomSequence(10, 90, 3);
  ASSERT_EQ(s.size(), 90);
  std::set<Arc> arcs;
  for (int i = 0; i < s.size(); ++i) {
    const SequenceEntry& e = s.entries[i];
    EXPECT_NE(e.arc.tail, e.arc.head);
    arcs.insert(e.arc);
    ASSERT_TRUE(e.rho.has_value());
    EXPECT_GE(*e.rho, 0.0);
    EXPECT_LT(*e.rho, 1.0);
    if (i > 0) EXPECT_LT(*s.entries[i - 1].rho, *e.rho);
  }
  EXPECT_EQ(arcs.size(), 90u);
}

TEST(UniformRandomSequenceTest, Deterministic) {
  EXPECT_EQ(UniformRandomSequence(100, 200, 7), UniformRandomSequence(100, 200, 7));
  EXPECT_NE(UniformRandomSequence(100, 200, 7), UniformRandomSequence(100, 200, 8));
}

TEST(UniformRandomSequenceTest, ShorterIsPrefix) {
  const ArcSequence a = UniformRandomSequence(30, 500, 12);
  const ArcSequence b = UniformRandomSequence(30, 200, 12);
  ASSERT_EQ(b.size(), 200);
  for (int i = 0; i < 200; ++i) EXPECT_EQ(a.entries[i], b.entries[i]);
}

TEST(UniformRandomSequenceTest, RejectsBadCounts) {
  EXPECT_THROW(UniformRandomSequence(3, 7, 1), std::invalid_argument);
  EXPECT_THROW(UniformRandomSequence(3, -1, 1), std::invalid_argument);
  EXPECT_EQ(UniformRandomSequence(3, 0, 1).size(), 0);
}

// First-arc frequencies over n = 4 (12 pairs) are uniform: chi-squared
// with 11 degrees of freedom; 31.26 is the 0.999 quantile.
TEST(UniformRandomSequenceProperty, FirstArcIsUniform) {
  constexpr int kSeeds = 120000;
  std::map<Arc, int> count;
  for (int seed = 0; seed < kSeeds; ++seed) {
    ++count[UniformRandomSequence(4, 1, seed).entries[0].arc];
  }
  ASSERT_EQ(count.size(), 12u);
  const double expected = kSeeds / 12.0;
  double chi2 = 0;
  for (const auto& [arc, c] : count) {
    chi2 += (c - expected) * (c - expected) / expected;
  }
  EXPECT_LT(chi2, 31.26);
}

// Arcs with value <= p form D(n, p): each pair is included with
// probability p. Per-pair z-scores stay within 4.5 standard deviations.
TEST(UniformRandomSequenceProperty, ThresholdPrefixIsBinomial) {
  constexpr int kSeeds = 100000;
  constexpr double p = 0.3;
  std::map<Arc, int> count;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const ArcSequence s = UniformRandomSequence(5, 20, seed);
    const int k = PhaseSplitIndex(s, p);
    for (int i = 0; i < k; ++i) ++count[s.entries[i].arc];
  }
  ASSERT_EQ(count.size(), 20u);
  const double sd = std::sqrt(kSeeds * p * (1 - p));
  for (const auto& [arc, c] : count) {
    EXPECT_LT(std::abs(c - kSeeds * p) / sd, 4.5) << arc;
  }
}

TEST(BidirectedPathAdversaryTest, FourVertices) {
  const ArcSequence s = BidirectedPathAdversary(4);
  std::vector<Arc> arcs;
  for (const SequenceEntry& e : s.entries) {
    arcs.push_back(e.arc);
    EXPECT_FALSE(e.rho.has_value());
  }
  EXPECT_THAT(arcs, ElementsAre(Arc{1, 2}, Arc{2, 1}, Arc{3, 2}, Arc{2, 3},
                                Arc{0, 1}, Arc{1, 0}));
  EXPECT_FALSE(s.seed.has_value());
}

TEST(BidirectedPathAdversaryTest, ShapeAndFinalGraph) {
  for (int n : {4, 6, 8, 100}) {
    const ArcSequence s = BidirectedPathAdversary(n);
    EXPECT_EQ(s.size(), 2 * (n - 1));
    Digraph g(n);
    for (const SequenceEntry& e : s.entries) {
      EXPECT_EQ(std::abs(e.arc.tail - e.arc.head), 1);
      EXPECT_FALSE(g.AddArc(e.arc));
    }
    EXPECT_EQ(MaxForestCardinality(g), n - 1);
  }
  EXPECT_THROW(BidirectedPathAdversary(5), std::invalid_argument);
  EXPECT_THROW(BidirectedPathAdversary(2), std::invalid_argument);
}

TEST(BidirectedPathAdversaryTest, ForcedRecourse) {
  for (int n : {4, 6, 8, 10}) {
    EXPECT_EQ(RunSequence(BidirectedPathAdversary(n)).total_recourse,
              AdversaryForcedRecourse(n));
  }
  EXPECT_EQ(AdversaryForcedRecourse(6), 10);
}

TEST(PhaseSplitIndexTest, Examples) {
  ArcSequence s;
  s.n = 3;
  s.entries = {{{0, 1}, 0.1}, {{1, 2}, 0.3}, {{2, 0}, 0.9}};
  EXPECT_EQ(PhaseSplitIndex(s, 0.5), 2);
  EXPECT_EQ(PhaseSplitIndex(s, 0.05), 0);
  EXPECT_EQ(PhaseSplitIndex(s, 0.95), 3);
  s.entries[1].rho.reset();
  EXPECT_THROW(PhaseSplitIndex(s, 0.5), std::invalid_argument);
}

}  // namespace
}  // namespace arbor
