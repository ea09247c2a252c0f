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
#include <map>

#include "pmdecomp/decomposer.h"
#include "pmdecomp/errors.h"
#include "pmdecomp/oracle.h"
#include "testing/instances.h"

namespace pmdecomp {
namespace {

using testing::E;
using testing::V;

PerfectMatching Pm(const Graph& g, std::initializer_list<const char*> pairs) {
  PerfectMatching m;
  for (const char* p : pairs) m.edges.push_back(E(g, p[0], p[1]));
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

VerifyFailureReason ReasonOf(const VerifyResult& r) {
  return std::get<VerifyFailure>(r).reason;
}

std::vector<PerfectMatching> MatchingsOf(const Decomposition& d) {
  std::vector<PerfectMatching> out;
  for (const Term& t : d.terms) out.push_back(t.matching);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(DecomposeTest, G1ThreeThirds) {
  const FracMatching x = testing::G1();
  const DecompositionTrace t = Decompose(x);
  ASSERT_EQ(t.terms.terms.size(), 3u);
  for (const Term& term : t.terms.terms) EXPECT_EQ(term.coeff, Rat(1, 3));
  EXPECT_TRUE(IsOk(VerifyDecomposition(x, t.terms)));
  const Graph& g = x.graph();
  const auto bad = Pm(g, {"ab", "cd", "ef"});
  for (const Term& term : t.terms.terms) EXPECT_NE(term.matching, bad);
}

TEST(DecomposeTest, PetersenSixSixths) {
  const FracMatching x = testing::Petersen();
  const DecompositionTrace t = Decompose(x);
  ASSERT_EQ(t.terms.terms.size(), 6u);
  for (const Term& term : t.terms.terms) EXPECT_EQ(term.coeff, Rat(1, 6));
  EXPECT_EQ(MatchingsOf(t.terms),
            oracle::EnumeratePerfectMatchings(x.graph()));
  EXPECT_GE(t.stats.type2_phases, 1);
}

TEST(DecomposeTest, IntegralInputIsOneTerm) {
  const Graph g = testing::G1Graph();
  const PerfectMatching m = Pm(g, {"ab", "ce", "df"});
  const DecompositionTrace t = Decompose(testing::Indicator(g, m));
  ASSERT_EQ(t.terms.terms.size(), 1u);
  EXPECT_EQ(t.terms.terms[0].coeff, Rat(1));
  EXPECT_EQ(t.terms.terms[0].matching, m);
  EXPECT_EQ(t.phases.size(), 1u);
  EXPECT_EQ(t.phases[0].type, PhaseType::kType1);
}

TEST(DecomposeTest, RejectsScaledInput) {
  EXPECT_THROW(Decompose(testing::PetersenMinusSpokes()), ArgumentError);
}

TEST(DecomposeTest, RejectsInfeasibleInput) {
  const FracMatching x =
      testing::Uniform(testing::TwoTrianglesGraph(), Rat(1, 2));
  try {
    Decompose(x);
    FAIL() << "expected InfeasibleInputError";
  } catch (const InfeasibleInputError& e) {
    EXPECT_NE(std::string(e.what()).find("{3,4,5}"), std::string::npos)
        << e.what();
  }
}

TEST(DecomposeTest, ObserverSeesEveryPhase) {
  int calls = 0;
  DecomposeOptions options;
  options.observer = [&](const PhaseObservation& o) {
    EXPECT_EQ(o.record.index, calls);
    EXPECT_EQ(o.y_after.alpha(), o.record.alpha_after);
    ++calls;
  };
  const DecompositionTrace t = Decompose(testing::Petersen(), options);
  EXPECT_EQ(calls, static_cast<int>(t.phases.size()));
}

TEST(DecomposeTest, PhasesAreConsistent) {
  const DecompositionTrace t = Decompose(testing::Petersen());
  Rat alpha(1);
  for (const PhaseRecord& p : t.phases) {
    EXPECT_EQ(p.alpha_before, alpha);
    EXPECT_EQ(p.alpha_after, alpha - p.coeff);
    EXPECT_LE(p.coeff, p.beta);
    EXPECT_EQ(p.type == PhaseType::kType2, p.new_tight_cut.has_value());
    alpha = p.alpha_after;
  }
  EXPECT_EQ(alpha, Rat(0));
}

TEST(DecomposePropertyTest, MatchesOracleOnRandomInstances) {
  testing::Rng rng(37);
  for (int iter = 0; iter < 80; ++iter) {
    const int n = 4 + 2 * (iter % 5);
    const auto inst = testing::RandomConvexCombination(rng, n, 2, 8);
    DecomposeOptions options;
    options.cross_check_bisection = true;
    const DecompositionTrace t = Decompose(inst.x, options);
    EXPECT_TRUE(IsOk(VerifyDecomposition(inst.x, t.terms)));
    EXPECT_LE(t.terms.terms.size(), SupportEdges(inst.x).size());
    EXPECT_LE(t.stats.type2_phases, n / 2 - 1);
    EXPECT_TRUE(oracle::BruteDecompose(inst.x).has_value());
  }
}

TEST(DecomposePropertyTest, PreservesMinWeightFace) {
  testing::Rng rng(41);
  for (int iter = 0; iter < 60; ++iter) {
    const auto inst = testing::RandomMinWeightCombination(rng, 4 + 2 * (iter % 4));
    const DecompositionTrace t = Decompose(inst.x);
    EXPECT_TRUE(IsOk(VerifyMinWeightProperty(t.terms, inst.weights)));
  }
}

TEST(FindGammaTest, PetersenSpokesGiveOneSixth) {
  const FracMatching x = testing::Petersen();
  const PerfectMatching spokes = testing::Spokes(x.graph());
  const FracMatching residual = SubtractMatching(x, spokes, Rat(1, 3));
  const OddCutResult cut = MinOddCut(residual);
  ASSERT_LT(cut.capacity, residual.alpha());
  const GammaResult r = FindGamma(Rat(1), x, spokes, Rat(1, 3), cut.set);
  EXPECT_EQ(r.gamma, Rat(1, 6));
  EXPECT_GE(r.iterations, 1);
  const FracMatching y = SubtractMatching(x, spokes, r.gamma);
  EXPECT_EQ(CutCapacity(y, r.witness), y.alpha());
  EXPECT_EQ(FindGammaBisect(Rat(1), x, spokes, Rat(1, 3)), Rat(1, 6));
  EXPECT_EQ(oracle::BruteGamma(Rat(1), x, spokes), Rat(1, 6));
}

TEST(FindGammaTest, TightCutCrossedThriceGivesZero) {
  const FracMatching x = testing::G1();
  const Graph& g = x.graph();
  const PerfectMatching m = Pm(g, {"ab", "cd", "ef"});
  const OddSet ace(6, {V('a'), V('c'), V('e')});
  EXPECT_EQ(Crossings(ace, m, g), 3);
  EXPECT_EQ(FindGamma(Rat(1), x, m, Rat(1, 3), ace).gamma, Rat(0));
}

TEST(FindGammaTest, RejectsBadArguments) {
  const FracMatching x = testing::Petersen();
  const PerfectMatching spokes = testing::Spokes(x.graph());
  const OddSet single(10, {0});
  EXPECT_THROW(FindGamma(Rat(1), x, spokes, Rat(1, 3), single), ArgumentError);
  const OddSet inner(10, {5, 6, 7, 8, 9});
  EXPECT_THROW(FindGamma(Rat(1, 2), x, spokes, Rat(1, 3), inner),
               ArgumentError);
}

TEST(FindGammaBisectTest, FeasibleBottleneckIsReturned) {
  const FracMatching x = testing::G1();
  const PerfectMatching m = Pm(x.graph(), {"ab", "ce", "df"});
  EXPECT_EQ(FindGammaBisect(Rat(1), x, m, Rat(1, 3)), Rat(1, 3));
}

TEST(BvnTest, FourCycle) {
  const FracMatching x = testing::Uniform(testing::CycleGraph(4), Rat(1, 2));
  const Decomposition d = BvnBipartite(x);
  EXPECT_EQ(d.terms.size(), 2u);
  EXPECT_TRUE(IsOk(VerifyDecomposition(x, d)));
}

TEST(BvnTest, PermutationIsOneTerm) {
  const Graph g(4, {{0, 2}, {1, 3}});
  const FracMatching x(g, {Rat(1), Rat(1)});
  const Decomposition d = BvnBipartite(x);
  ASSERT_EQ(d.terms.size(), 1u);
  EXPECT_EQ(d.terms[0].coeff, Rat(1));
}

TEST(BvnTest, RandomBipartiteRoundTrip) {
  testing::Rng rng(43);
  for (int iter = 0; iter < 50; ++iter) {
    const FracMatching x = testing::RandomBipartite(rng, 2 + iter % 5, 4);
    const Decomposition d = BvnBipartite(x);
    EXPECT_TRUE(IsOk(VerifyDecomposition(x, d)));
    EXPECT_LE(d.terms.size(), SupportEdges(x).size());
  }
}

TEST(BvnTest, RejectsNonBipartiteAndUnbalanced) {
  EXPECT_THROW(BvnBipartite(testing::G1()), ArgumentError);
  const FracMatching uneven(testing::CycleGraph(4),
                            {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 3)});
  EXPECT_THROW(BvnBipartite(uneven), ArgumentError);
}

class VerifyTest : public ::testing::Test {
 protected:
  FracMatching x_ = testing::G1();
  const Graph& g_ = x_.graph();
  PerfectMatching m1_ = Pm(g_, {"ab", "ce", "df"});
  PerfectMatching m2_ = Pm(g_, {"cd", "ae", "bf"});
  PerfectMatching m3_ = Pm(g_, {"ef", "ac", "bd"});
  Decomposition good_{{{Rat(1, 3), m1_}, {Rat(1, 3), m2_}, {Rat(1, 3), m3_}}};
};

TEST_F(VerifyTest, AcceptsExactDecomposition) {
  EXPECT_TRUE(IsOk(VerifyDecomposition(x_, good_)));
}

TEST_F(VerifyTest, DetectsTamperedCoefficient) {
  Decomposition d = good_;
  d.terms[0].coeff = Rat(1, 3) + Rat(BigInt(1), BigInt("1000000000000"));
  EXPECT_EQ(ReasonOf(VerifyDecomposition(x_, d)),
            VerifyFailureReason::kSumMismatch);
}

TEST_F(VerifyTest, DetectsComponentMismatch) {
  Decomposition d = good_;
  d.terms[0].coeff = Rat(1, 2);
  d.terms[1].coeff = Rat(1, 6);
  EXPECT_EQ(ReasonOf(VerifyDecomposition(x_, d)),
            VerifyFailureReason::kComponentMismatch);
}

TEST_F(VerifyTest, DetectsNonPositiveCoefficient) {
  Decomposition d = good_;
  d.terms.push_back({Rat(0), m1_});
  EXPECT_EQ(ReasonOf(VerifyDecomposition(x_, d)),
            VerifyFailureReason::kNonPositiveCoefficient);
}

TEST_F(VerifyTest, DetectsNonMatching) {
  Decomposition d = good_;
  d.terms[0].matching.edges.pop_back();
  EXPECT_EQ(ReasonOf(VerifyDecomposition(x_, d)),
            VerifyFailureReason::kNotPerfectMatching);
  d = good_;
  d.terms[0].matching.edges[0] = 99;
  EXPECT_EQ(ReasonOf(VerifyDecomposition(x_, d)),
            VerifyFailureReason::kNotPerfectMatching);
}

TEST_F(VerifyTest, DetectsEdgeOutsideSupport) {
  std::vector<Rat> values(x_.values().begin(), x_.values().end());
  for (EdgeId e : m1_.edges) values[e] = 0;
  const FracMatching y(x_.shared_graph(), values, Rat(2, 3));
  EXPECT_EQ(ReasonOf(VerifyDecomposition(y, good_)),
            VerifyFailureReason::kOutsideSupport);
}

TEST(VerifyPropertyTest, OracleDecompositionsVerify) {
  for (const FracMatching& x : {testing::G1(), testing::Petersen()}) {
    const auto d = oracle::BruteDecompose(x);
    ASSERT_TRUE(d);
    EXPECT_TRUE(IsOk(VerifyDecomposition(x, *d)));
  }
}

TEST(MinWeightPropertyTest, Examples) {
  const Graph g = testing::PetersenGraph();
  const auto all = oracle::EnumeratePerfectMatchings(g);
  Decomposition d;
  for (const auto& m : all) d.terms.push_back({Rat(1, 6), m});
  EXPECT_TRUE(IsOk(VerifyMinWeightProperty(d, std::vector<Rat>(15, Rat(1)))));
  std::vector<Rat> w(15, Rat(0));
  w[all.front().edges.front()] = 1;
  EXPECT_FALSE(IsOk(VerifyMinWeightProperty(d, w)));
}

TEST(SamplerTest, SingleTermAlwaysDrawn) {
  const Graph g = testing::G1Graph();
  const PerfectMatching m = Pm(g, {"ab", "ce", "df"});
  const Decomposition d{{{Rat(1), m}}};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(SampleMatching(d, seed), m);
  }
}

TEST(SamplerTest, FrequenciesTrackCoefficients) {
  const Graph g = testing::G1Graph();
  const Decomposition d{{{Rat(1, 2), Pm(g, {"ab", "ce", "df"})},
                         {Rat(1, 3), Pm(g, {"cd", "ae", "bf"})},
                         {Rat(1, 6), Pm(g, {"ef", "ac", "bd"})}}};
  std::map<PerfectMatching, int> counts;
  constexpr int kSeeds = 30000;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    ++counts[SampleMatching(d, seed)];
  }
  for (const Term& t : d.terms) {
    const double freq = static_cast<double>(counts[t.matching]) / kSeeds;
    const double p = t.coeff.raw().get_d();
    EXPECT_NEAR(freq, p, 0.02);
  }
}

TEST(SamplerTest, ReproducibleStream) {
  const Decomposition d = Decompose(testing::Petersen()).terms;
  MatchingSampler a(d, 2026), b(d, 2026);
  std::vector<int> first;
  for (int i = 0; i < 200; ++i) {
    const int k = a.DrawIndex();
    EXPECT_EQ(k, b.DrawIndex());
    first.push_back(k);
  }
  EXPECT_EQ(std::count(first.begin(), first.end(), first.front()) < 200, true);
}

TEST(SamplerTest, FixedSeedSequence) {
  const Graph g = testing::G1Graph();
  const Decomposition d{{{Rat(1, 3), Pm(g, {"ab", "ce", "df"})},
                         {Rat(1, 3), Pm(g, {"cd", "ae", "bf"})},
                         {Rat(1, 3), Pm(g, {"ef", "ac", "bd"})}}};
  MatchingSampler s(d, 42);
  std::vector<int> got;
  for (int i = 0; i < 12; ++i) got.push_back(s.DrawIndex());
  EXPECT_EQ(got, std::vector<int>({2, 0, 0, 2, 1, 1, 1, 0, 2, 2, 2, 1}));
}

TEST(SamplerTest, RejectsEmpty) {
  EXPECT_THROW(MatchingSampler(Decomposition{}, 1), ArgumentError);
}

}  // namespace
}  // namespace pmdecomp
