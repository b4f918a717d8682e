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

#include "arbor/mincost.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace arbor {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

WeightedDigraph GraphOf(int n, const std::vector<WeightedArc>& arcs,
                        Vertex root = 0) {
  WeightedDigraph g(n, root);
  for (const WeightedArc& a : arcs) g.AddArc(a);
  return g;
}

// Random instance in which every vertex is reachable from root 0.
WeightedDigraph RandomReachable(int n, std::mt19937_64& rng, int max_weight) {
  std::uniform_int_distribution<int> w(0, max_weight);
  while (true) {
    WeightedDigraph g(n, 0);
    const int arcs = static_cast<int>(rng() % (n * (n - 1) + 1));
    for (int i = 0; i < arcs; ++i) {
      const Vertex u = static_cast<Vertex>(rng() % n);
      const Vertex v = static_cast<Vertex>(rng() % n);
      if (u != v) g.AddArc(u, v, w(rng));
    }
    if (g.UnreachableFromRoot().empty()) return g;
  }
}

TEST(ChuLiuEdmondsTest, ZeroPath) {
  const WeightedDigraph g = GraphOf(3, {{{0, 1}, 0}, {{1, 2}, 0}});
  EXPECT_EQ(ChuLiuEdmonds(g).cost, 0);
}

TEST(ChuLiuEdmondsTest, Forced) {
  const WeightedDigraph g = GraphOf(2, {{{0, 1}, 5}, {{1, 0}, 7}});
  const Arborescence t = ChuLiuEdmonds(g);
  EXPECT_EQ(t.cost, 5);
  EXPECT_THAT(t.Arcs(g), ElementsAre(Arc{0, 1}));
}

TEST(ChuLiuEdmondsTest, ContractsCycle) {
  // The cheap 2-cycle {1, 2} must be entered once from the root.
  const WeightedDigraph g = GraphOf(
      3, {{{0, 1}, 10}, {{0, 2}, 12}, {{1, 2}, 1}, {{2, 1}, 1}});
  const Arborescence t = ChuLiuEdmonds(g);
  EXPECT_EQ(t.cost, 11);
  EXPECT_TRUE(IsSpanningArborescence(g, t));
}

TEST(ChuLiuEdmondsTest, UnreachableIsReported) {
  const WeightedDigraph g = GraphOf(4, {{{0, 1}, 1}, {{2, 3}, 1}});
  try {
    ChuLiuEdmonds(g);
    FAIL();
  } catch (const UnreachableError& e) {
    EXPECT_THAT(e.unreachable(), ElementsAre(2, 3));
  }
  EXPECT_THROW(BruteForceMinArborescence(g), UnreachableError);
  EXPECT_THROW(MinArborescenceWithCertificate(g), UnreachableError);
}

TEST(WeightedDigraphTest, RejectsNegativeWeight) {
  WeightedDigraph g(2, 0);
  EXPECT_THROW(g.AddArc(0, 1, -1), std::invalid_argument);
  EXPECT_FALSE(g.AddArc(0, 1, 3));
  EXPECT_TRUE(g.AddArc(0, 1, 1));
  EXPECT_EQ(g.weight(0), 3);
}

TEST(CertifiedTest, OptimalStartIsKept) {
  const WeightedDigraph g = GraphOf(3, {{{0, 1}, 0}, {{1, 2}, 0}, {{0, 2}, 4}});
  CertifiedOptions options;
  options.initial = Arborescence{{kNoArc, 0, 1}, 0};
  const CertifiedResult r = MinArborescenceWithCertificate(g, options);
  EXPECT_EQ(r.tree, *options.initial);
  EXPECT_EQ(r.tree.cost, 0);
  EXPECT_THAT(r.packing.sets, IsEmpty());
  EXPECT_EQ(r.packing.Value(), 0);
  EXPECT_EQ(r.restarts, 0);
  EXPECT_TRUE(VerifyDualCertificate(g, r.tree, r.packing).ok());
}

// Root r = 0, a = 1, b = 2.
TEST(CertifiedTest, ThreeVertexExample) {
  const WeightedDigraph g = GraphOf(3, {{{0, 1}, 0}, {{0, 2}, 5}, {{1, 2}, 1}});
  CertifiedOptions options;
  Arborescence start;
  start.parent_arc = {kNoArc, 0, 1};
  options.initial = start;
  const CertifiedResult r = MinArborescenceWithCertificate(g, options);
  EXPECT_EQ(r.tree.cost, 1);
  EXPECT_THAT(r.tree.Arcs(g), ElementsAre(Arc{0, 1}, Arc{1, 2}));
  EXPECT_EQ(r.packing.Value(), 1);
  EXPECT_EQ(BruteForceMinArborescence(g).cost, 1);
  const CertificateReport report = VerifyDualCertificate(g, r.tree, r.packing);
  EXPECT_TRUE(report.ok()) << ::testing::PrintToString(report.diagnostics);
}

TEST(VerifyDualCertificateTest, Examples) {
  const WeightedDigraph zero = GraphOf(2, {{{0, 1}, 0}});
  Arborescence t;
  t.parent_arc = {kNoArc, 0};
  EXPECT_TRUE(VerifyDualCertificate(zero, t, DualPacking{}).ok());

  const WeightedDigraph g = GraphOf(3, {{{0, 1}, 0}, {{0, 2}, 5}, {{1, 2}, 1}});
  Arborescence best;
  best.parent_arc = {kNoArc, 0, 2};
  DualPacking packing;
  packing.sets = {{{2}, 1}};
  EXPECT_TRUE(VerifyDualCertificate(g, best, packing).ok());

  DualPacking inflated = packing;
  inflated.sets[0].multiplier = 2;
  const CertificateReport r = VerifyDualCertificate(g, best, inflated);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.reduced_nonnegative && r.value_matches);

  DualPacking with_root = packing;
  with_root.sets.push_back({{0, 1, 2}, 0});
  EXPECT_FALSE(VerifyDualCertificate(g, best, with_root).laminar);

  // A non-optimal tree cannot be certified by any packing.
  Arborescence worse;
  worse.parent_arc = {kNoArc, 0, 1};
  packing.sets = {{{2}, 5}};
  EXPECT_FALSE(VerifyDualCertificate(g, worse, packing).ok());
}

TEST(IsLaminarTest, Examples) {
  EXPECT_TRUE(IsLaminar({{{1, 2, 3}, 1}, {{1}, 1}, {{2, 3}, 1}, {{4}, 1}}, 5));
  EXPECT_FALSE(IsLaminar({{{1, 2}, 1}, {{2, 3}, 1}}, 5));
  EXPECT_TRUE(IsLaminar({{{1, 2}, 1}, {{1, 2}, 1}}, 5));
  EXPECT_FALSE(IsLaminar({{{1, 2, 3}, 1}, {{1, 2}, 1}, {{2, 3}, 1}}, 5));
}

TEST(BruteForceMinArborescenceTest, Limits) {
  EXPECT_THROW(BruteForceMinArborescence(WeightedDigraph(9, 0)),
               std::invalid_argument);
}

// Brute force, Chu-Liu/Edmonds and the certified algorithm agree, and
// every certificate verifies.
TEST(MinCostProperty, OraclesAgree) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const WeightedDigraph g = RandomReachable(n, rng, 9);
    const Weight brute = BruteForceMinArborescence(g).cost;
    const Arborescence cle = ChuLiuEdmonds(g);
    ASSERT_EQ(cle.cost, brute) << "trial " << trial;
    ASSERT_TRUE(IsSpanningArborescence(g, cle));
    const CertifiedResult r = MinArborescenceWithCertificate(g);
    ASSERT_EQ(r.tree.cost, brute) << "trial " << trial;
    ASSERT_TRUE(r.packing.laminar);
    const CertificateReport report = VerifyDualCertificate(g, r.tree, r.packing);
    ASSERT_TRUE(report.ok()) << ::testing::PrintToString(report.diagnostics);
  }
}

// The other candidate rule: either it certifies the optimum or it
// reports a failure; it never returns a wrong tree.
TEST(MinCostProperty, ParentTailRuleNeverLies) {
  std::mt19937_64 rng(32);
  CertifiedOptions options;
  options.rule = CandidateRule::kParentTail;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const WeightedDigraph g = RandomReachable(n, rng, 9);
    try {
      const CertifiedResult r = MinArborescenceWithCertificate(g, options);
      ASSERT_EQ(r.tree.cost, ChuLiuEdmonds(g).cost);
      ASSERT_TRUE(VerifyDualCertificate(g, r.tree, r.packing).ok());
    } catch (const CertificationFailure&) {
    }
  }
}

TEST(CertifiedTest, WarmStartFromAnyTree) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const WeightedDigraph g = RandomReachable(n, rng, 3);
    CertifiedOptions options;
    options.initial = BruteForceMinArborescence(g);
    const CertifiedResult r = MinArborescenceWithCertificate(g, options);
    ASSERT_EQ(r.tree.cost, options.initial->cost);
    ASSERT_EQ(r.restarts, 0);
  }
}

TEST(TriangleAdversaryTest, Shape) {
  const WeightedInstance inst = TriangleAdversary(30);
  EXPECT_EQ(inst.n, 30);
  EXPECT_EQ(inst.root, 0);
  for (const WeightedArc& a : inst.arcs) {
    EXPECT_TRUE(a.weight == 0 || a.weight == 1);
  }
  EXPECT_THAT(inst.InitialGraph().UnreachableFromRoot(), IsEmpty());
  // Every arc is distinct.
  EXPECT_EQ(inst.FullGraph().num_arcs(), static_cast<int>(inst.arcs.size()));
  EXPECT_THROW(TriangleAdversary(10), std::invalid_argument);
  EXPECT_THROW(TriangleAdversary(6), std::invalid_argument);
}

TEST(TriangleAdversaryTest, QuadraticRecourse) {
  for (int n : {30, 60}) {
    const IncrementalMinCostResult r =
        RunIncrementalMinCost(TriangleAdversary(n), MinCostSolver::kChuLiuEdmonds);
    EXPECT_GE(r.total_recourse * 20, static_cast<int64_t>(n) * n) << n;
    const IncrementalMinCostResult c =
        RunIncrementalMinCost(TriangleAdversary(n), MinCostSolver::kCertified);
    EXPECT_EQ(c.costs, r.costs);
  }
}

TEST(IncrementalMinCostTest, CostsNeverIncrease) {
  const IncrementalMinCostResult r =
      RunIncrementalMinCost(TriangleAdversary(15), MinCostSolver::kChuLiuEdmonds);
  ASSERT_FALSE(r.costs.empty());
  for (size_t i = 1; i < r.costs.size(); ++i) EXPECT_LE(r.costs[i], r.costs[i - 1]);
  EXPECT_EQ(r.changes.size(), r.costs.size() - 1);
}

}  // namespace
}  // namespace arbor
