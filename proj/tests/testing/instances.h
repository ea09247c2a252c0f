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

// Named fixtures and seeded random instance generators shared by the unit,
// property and acceptance suites.

#ifndef PMDECOMP_TESTS_TESTING_INSTANCES_H_
#define PMDECOMP_TESTS_TESTING_INSTANCES_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "pmdecomp/fractional.h"
#include "pmdecomp/mincut.h"

namespace pmdecomp::testing {

using Rng = std::mt19937_64;

// Vertex index of a letter name: 'a' -> 0.
constexpr Vertex V(char c) { return c - 'a'; }

// Edge id of {u, v} in g; aborts the test binary if absent.
EdgeId E(const Graph& g, char u, char v);

// Triangular prism: triangles a-c-e and b-d-f joined by a-b, c-d, e-f.
Graph G1Graph();
// Outer cycle a-b-c-d-e, spokes a-f .. e-j, inner pentagram f-h-j-g-i.
Graph PetersenGraph();
Graph CycleGraph(int n);
Graph CompleteGraph(int n);
Graph TwoTrianglesGraph();

FracMatching Uniform(const Graph& g, const Rat& value, const Rat& alpha = 1);
FracMatching G1();        // all edges 1/3
FracMatching Petersen();  // all edges 1/3
// Spokes at 0, cycle edges at 1/3, alpha 2/3.
FracMatching PetersenMinusSpokes();
PerfectMatching Spokes(const Graph& petersen);

FracMatching Indicator(const Graph& g, const PerfectMatching& m);

struct RandomInstance {
  FracMatching x;
  std::vector<PerfectMatching> generators;
};

// Random graph on n vertices (edge probability p) with at least
// `min_matchings` perfect matchings, and x a random rational convex
// combination of between lo and hi of them.
RandomInstance RandomConvexCombination(Rng& rng, int n, int lo, int hi,
                                       double p = 0.5);

// Random graph with edge probability p and nonnegative rational values
// with denominators up to max_den (some values zero).
FracMatching RandomWeighted(Rng& rng, int n, double p, int max_den);

CapacitatedGraph RandomCapacitated(Rng& rng, int n, double p, int max_den);

// Random graph with at least one perfect matching and integer weights in
// [0, max_w].
struct WeightedInstance {
  Graph g;
  std::vector<std::int64_t> weights;
};
WeightedInstance RandomIntegerWeighted(Rng& rng, int n, double p, int max_w);

// Bipartite (sides 0..k-1 and k..2k-1) convex combination of random
// permutation matchings.
FracMatching RandomBipartite(Rng& rng, int k, int terms);

// x is a random convex combination of every minimum-w matching of a random
// graph; w has small integer entries.
struct MinWeightInstance {
  FracMatching x;
  std::vector<Rat> weights;
};
MinWeightInstance RandomMinWeightCombination(Rng& rng, int n);

// Vertices split at random into matched pairs (value 1) and cycles of
// length >= 3 (value 1/2). Degree sums are all 1; the vector is a fractional
// perfect matching iff every cycle is even.
FracMatching RandomCycleCover(Rng& rng, int n);

}  // namespace pmdecomp::testing

#endif  // PMDECOMP_TESTS_TESTING_INSTANCES_H_
