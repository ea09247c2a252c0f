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

// Fractional perfect matchings, odd vertex sets, perfect matchings and
// decompositions, plus the arithmetic-only operations on them.

#ifndef PMDECOMP_FRACTIONAL_H_
#define PMDECOMP_FRACTIONAL_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pmdecomp/graph.h"
#include "pmdecomp/rational.h"

namespace pmdecomp {

// A vertex subset of odd cardinality with 1 <= |S| <= n - 1, stored as a
// sorted member list so that equality is syntactic.
class OddSet {
 public:
  OddSet() = default;
  // Throws ArgumentError if members repeat, fall outside 0..n-1, have even
  // cardinality, or cover every vertex.
  OddSet(int num_vertices, std::vector<Vertex> members);

  int num_vertices() const { return num_vertices_; }
  int size() const { return static_cast<int>(members_.size()); }
  std::span<const Vertex> members() const { return members_; }
  bool Contains(Vertex v) const;
  // Characteristic vector over 0..n-1.
  std::vector<char> Indicator() const;
  OddSet Complement() const;
  bool IsSubsetOf(const OddSet& other) const;
  bool IsDisjointFrom(const OddSet& other) const;

  std::string ToString() const;

  friend bool operator==(const OddSet&, const OddSet&) = default;
  friend auto operator<=>(const OddSet& a, const OddSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Vertex> members_;
};

// Edge ids of a perfect matching, sorted ascending.
struct PerfectMatching {
  std::vector<EdgeId> edges;
  friend bool operator==(const PerfectMatching&,
                         const PerfectMatching&) = default;
  friend auto operator<=>(const PerfectMatching& a, const PerfectMatching& b) {
    return a.edges <=> b.edges;
  }
};

bool IsPerfectMatching(const Graph& g, std::span<const EdgeId> edges);

// Edge-indexed rational vector y on a graph together with its scale alpha.
// Values may be arbitrary rationals here; `ValidateFractionalPM` decides
// whether the pair is an alpha-fractional perfect matching.
class FracMatching {
 public:
  // Throws ArgumentError if the value count differs from the edge count or
  // alpha lies outside [0, 1].
  FracMatching(std::shared_ptr<const Graph> graph, std::vector<Rat> values,
               Rat alpha = Rat(1));
  FracMatching(Graph graph, std::vector<Rat> values, Rat alpha = Rat(1));

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& shared_graph() const { return graph_; }
  int num_vertices() const { return graph_->num_vertices(); }
  std::span<const Rat> values() const { return values_; }
  const Rat& value(EdgeId e) const { return values_[e]; }
  const Rat& alpha() const { return alpha_; }

  bool IsZero() const;

  friend bool operator==(const FracMatching& a, const FracMatching& b) {
    return *a.graph_ == *b.graph_ && a.values_ == b.values_ &&
           a.alpha_ == b.alpha_;
  }

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<Rat> values_;
  Rat alpha_;
};

struct Term {
  Rat coeff;
  PerfectMatching matching;
};

struct Decomposition {
  std::vector<Term> terms;
  Rat TotalCoefficient() const;
};

// Subgraph of edges with strictly positive value (same vertex set).
Graph Support(const FracMatching& x);
// Ids (in x.graph()) of edges with strictly positive value, ascending.
std::vector<EdgeId> SupportEdges(const FracMatching& x);

Rat CutCapacity(const FracMatching& x, const OddSet& s);
std::vector<Rat> DegreeSums(const FracMatching& x);

// y - b * M with alpha lowered by b. Throws ArgumentError when b < 0, when
// b exceeds the smallest value on M, or when M is not a perfect matching.
FracMatching SubtractMatching(const FracMatching& y, const PerfectMatching& m,
                              const Rat& b);

// Largest reduced denominator over the support (1 for the zero vector).
BigInt MaxDenominator(const FracMatching& x);

// Least common multiple of every value's denominator and alpha's.
BigInt CommonDenominator(const FracMatching& x);

}  // namespace pmdecomp

#endif  // PMDECOMP_FRACTIONAL_H_
