// Copyright 2026 The pmdecomp Authors
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

#include <gtest/gtest.h>

#include <algorithm>

#include "pmdecomp/decomposer.h"
#include "pmdecomp/errors.h"
#include "pmdecomp/mincut.h"
#include "pmdecomp/oracle.h"
#include "testing/instances.h"

namespace pmdecomp::oracle {
namespace {

using testing::V;

int Girth(const Graph& g) {
  int best = g.num_vertices() + 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    // Shortest u-v path avoiding e, plus e.
    const Vertex s = g.edge(e).u, t = g.edge(e).v;
    std::vector<int> dist(g.num_vertices(), -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex u = queue[i];
      for (EdgeId f : g.incident(u)) {
        if (f == e) continue;
        const Vertex w = g.Other(f, u);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[t] >= 0) best = std::min(best, dist[t] + 1);
  }
  return best;
}

TEST(PetersenFixtureTest, CubicWithGirthFive) {
  const Graph g = testing::PetersenGraph();
  EXPECT_EQ(g.num_vertices(), 10);
  EXPECT_EQ(g.num_edges(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.incident(v).size(), 3u);
  EXPECT_EQ(Girth(g), 5);
}

TEST(EnumerateTest, Counts) {
  EXPECT_EQ(EnumeratePerfectMatchings(testing::PetersenGraph()).size(), 6u);
  EXPECT_EQ(EnumeratePerfectMatchings(Graph(2, {{0, 1}})).size(), 1u);
  EXPECT_TRUE(EnumeratePerfectMatchings(testing::TwoTrianglesGraph()).empty());
  EXPECT_EQ(EnumeratePerfectMatchings(testing::CompleteGraph(6)).size(), 15u);
  EXPECT_EQ(EnumeratePerfectMatchings(testing::G1Graph()).size(), 4u);
}

TEST(EnumerateTest, SortedAndPerfect) {
  const Graph g = testing::CompleteGraph(8);
  const auto all = EnumeratePerfectMatchings(g);
  EXPECT_EQ(all.size(), 105u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  for (const auto& m : all) EXPECT_TRUE(IsPerfectMatching(g, m.edges));
}

TEST(EnumerateTest, SizeLimit) {
  EXPECT_THROW(EnumeratePerfectMatchings(testing::CycleGraph(16)),
               SizeLimitError);
  EXPECT_EQ(
      EnumeratePerfectMatchings(testing::CycleGraph(16), OracleLimits{16, 12})
          .size(),
      2u);
}

TEST(BruteMinOddCutTest, Examples) {
  const auto g1 = BruteMinOddCut(testing::G1(), 3);
  ASSERT_TRUE(g1);
  EXPECT_EQ(g1->capacity, Rat(1));
  const auto p = BruteMinOddCut(testing::Petersen(), 3);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->capacity, Rat(5, 3));
  EXPECT_EQ(BruteMinOddCut(testing::Petersen(), 1)->capacity, Rat(1));
  EXPECT_FALSE(BruteMinOddCut(
      testing::Uniform(testing::CycleGraph(4), Rat(1, 2)), 3));
}

TEST(BruteMinOddCutTest, Limits) {
  EXPECT_THROW(BruteMinOddCut(testing::Uniform(testing::CycleGraph(14),
                                               Rat(1, 2)), 1),
               SizeLimitError);
  EXPECT_THROW(
      BruteMinOddCut(testing::Uniform(testing::CycleGraph(5), Rat(1, 2)), 1),
      ArgumentError);
}

TEST(BruteDecomposeTest, Examples) {
  const auto g1 = BruteDecompose(testing::G1());
  ASSERT_TRUE(g1);
  ASSERT_EQ(g1->terms.size(), 3u);
  for (const Term& t : g1->terms) EXPECT_EQ(t.coeff, Rat(1, 3));

  const auto p = BruteDecompose(testing::Petersen());
  ASSERT_TRUE(p);
  ASSERT_EQ(p->terms.size(), 6u);
  for (const Term& t : p->terms) EXPECT_EQ(t.coeff, Rat(1, 6));

  const Graph k2(2, {{0, 1}});
  const auto one = BruteDecompose(FracMatching(k2, {Rat(1)}));
  ASSERT_TRUE(one);
  ASSERT_EQ(one->terms.size(), 1u);
  EXPECT_EQ(one->terms[0].coeff, Rat(1));
}

TEST(BruteDecomposeTest, Infeasible) {
  EXPECT_FALSE(BruteDecompose(
      testing::Uniform(testing::TwoTrianglesGraph(), Rat(1, 2))));
  EXPECT_FALSE(BruteDecompose(testing::PetersenMinusSpokes()));
}

TEST(BruteDecomposeTest, FeasibleIffValid) {
  testing::Rng rng(47);
  int feasible = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 4 + 2 * (iter % 5);
    const FracMatching x = iter % 2 == 0
                               ? testing::RandomCycleCover(rng, n)
                               : testing::RandomConvexCombination(rng, n, 1, 6).x;
    const auto d = BruteDecompose(x);
    EXPECT_EQ(d.has_value(), IsValid(ValidateFractionalPM(x))) << iter;
    if (d) {
      ++feasible;
      EXPECT_TRUE(IsOk(VerifyDecomposition(x, *d)));
    }
  }
  EXPECT_GT(feasible, 100);
}

TEST(BruteGammaTest, Examples) {
  const FracMatching x = testing::Petersen();
  EXPECT_EQ(BruteGamma(Rat(1), x, testing::Spokes(x.graph())), Rat(1, 6));
  const FracMatching c4 = testing::Uniform(testing::CycleGraph(4), Rat(1, 2));
  const PerfectMatching m{{0, 2}};
  EXPECT_FALSE(BruteGamma(Rat(1), c4, m));
}

TEST(BruteAllPairsTest, Path) {
  const CapacitatedGraph g(3, {{0, 1, Rat(2)}, {1, 2, Rat(1, 2)}});
  const auto cut = BruteAllPairsMinCut(g);
  EXPECT_EQ(cut[0][1], Rat(2));
  EXPECT_EQ(cut[0][2], Rat(1, 2));
  EXPECT_EQ(cut[2][1], Rat(1, 2));
  EXPECT_EQ(cut[1][1], Rat(0));
}

TEST(BruteTightOddCutsTest, Examples) {
  const auto g1 = BruteTightOddCuts(testing::G1());
  EXPECT_EQ(g1, std::vector<OddSet>({OddSet(6, {V('a'), V('c'), V('e')}),
                                     OddSet(6, {V('b'), V('d'), V('f')})}));
  EXPECT_TRUE(BruteTightOddCuts(testing::Petersen()).empty());
}

}  // namespace
}  // namespace pmdecomp::oracle
