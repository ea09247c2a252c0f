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

// Exact max-flow / min-cut, Gomory-Hu cut trees, minimum odd cuts and the
// tight odd cut search, all over rational capacities.
//
// Capacities are scaled to integers by the common denominator before any
// flow is pushed; the flow code then runs on 64-bit integers when the scaled
// total fits and on GMP integers otherwise. Results are converted back to
// exact rationals, so no tolerance appears anywhere.

#ifndef PMDECOMP_MINCUT_H_
#define PMDECOMP_MINCUT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pmdecomp/fractional.h"
#include "pmdecomp/graph.h"
#include "pmdecomp/rational.h"

namespace pmdecomp {

struct CapacitatedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Rat capacity;
};

// Undirected graph with nonnegative rational capacities. Parallel edges are
// merged by summing capacities and self-loops are dropped on construction;
// the stored edges are sorted by (min endpoint, max endpoint).
class CapacitatedGraph {
 public:
  CapacitatedGraph() = default;
  // Throws ArgumentError on negative capacities or endpoints out of range.
  CapacitatedGraph(int num_vertices, std::vector<CapacitatedEdge> edges);

  // Support graph of x with capacities x_e.
  static CapacitatedGraph FromFracMatching(const FracMatching& x);

  int num_vertices() const { return num_vertices_; }
  std::span<const CapacitatedEdge> edges() const { return edges_; }
  Rat CutCapacity(std::span<const char> in_set) const;

 private:
  int num_vertices_ = 0;
  std::vector<CapacitatedEdge> edges_;
};

// Counters for the flow work performed by a computation. Callers pass a
// pointer to accumulate; nullptr disables counting.
struct CutStats {
  std::int64_t max_flow_calls = 0;
  std::int64_t odd_cut_calls = 0;  // Padberg-Rao invocations
};

struct MinCutResult {
  Rat value;
  std::vector<Vertex> source_side;  // sorted, contains s
};

// Throws ArgumentError when s == t or either is out of range.
MinCutResult MaxFlowMinCut(const CapacitatedGraph& g, Vertex s, Vertex t,
                           CutStats* stats = nullptr);

struct GomoryHuEdge {
  Vertex child = 0;   // fundamental cut of this edge is child's subtree
  Vertex parent = 0;
  Rat weight;
};

// Gomory-Hu cut tree rooted at vertex 0: removing an edge splits the tree
// into the child's subtree and the rest, and that split is a minimum cut
// between its two endpoints in the original graph.
class GomoryHuTree {
 public:
  GomoryHuTree(int num_vertices, std::vector<Vertex> parent,
               std::vector<Rat> parent_weight);

  int num_vertices() const { return static_cast<int>(parent_.size()); }
  // Edges for every non-root vertex, ordered by child id.
  std::vector<GomoryHuEdge> Edges() const;
  // Minimum edge weight on the tree path between s and t (s != t).
  Rat MinCutValue(Vertex s, Vertex t) const;
  // Characteristic vector of `child`'s subtree.
  std::vector<char> SubtreeOf(Vertex child) const;

 private:
  std::vector<Vertex> parent_;
  std::vector<Rat> weight_;
};

GomoryHuTree BuildGomoryHuTree(const CapacitatedGraph& g,
                               CutStats* stats = nullptr);

struct OddCutResult {
  OddSet set;
  Rat capacity;
};

// Minimum-capacity odd set of (G_x, x), singletons included. Each split is
// represented by the side not containing vertex 0; ties go to the smaller
// set, then the lexicographically smaller member list. Throws ArgumentError
// if n is odd or n < 2.
OddCutResult MinOddCut(const FracMatching& x, CutStats* stats = nullptr);

// Searches (G_x, x) for an odd set S with 3 <= |S| <= n - 3 whose capacity
// equals alpha exactly. Perturbs each pair of vertex-disjoint support edges
// by a small epsilon, runs a minimum odd cut, and re-checks candidates
// against the unperturbed capacities. Tight cuts without two disjoint
// support edges are invisible to the perturbation; they arise only from a
// disconnected support (a union of components minus one vertex) and are
// read off the components directly. Throws ArgumentError when x fails
// validation.
std::optional<OddSet> FindTightOddCut(const FracMatching& x,
                                      CutStats* stats = nullptr);

// Lower-level form used on contracted graphs. `odd_unit[v]` is nonzero when
// vertex v stands for an odd number of original vertices; a set counts as
// odd when it holds an odd number of odd units. Returns a set of at least
// three vertices whose complement also has at least three, whose capacity
// equals alpha, and which does not contain `exclude`; vertex lists are
// sorted. Every vertex must be an odd unit and every degree must equal
// alpha (the caller's responsibility).
std::optional<std::vector<Vertex>> FindTightOddSet(
    const CapacitatedGraph& g, std::span<const char> odd_unit,
    const Rat& alpha, Vertex exclude, CutStats* stats = nullptr);

struct ValidationOk {};

struct NegativeEdgeViolation {
  EdgeId edge;
  Rat value;
};
struct DegreeViolation {
  Vertex vertex;
  Rat degree_sum;
};
struct OddCutViolation {
  OddSet set;
  Rat capacity;
};
struct OddVertexCountViolation {
  int num_vertices;
};

using Violation = std::variant<NegativeEdgeViolation, DegreeViolation,
                               OddCutViolation, OddVertexCountViolation>;
using ValidationResult = std::variant<ValidationOk, Violation>;

// Checks nonnegativity, every degree sum equal to alpha, and every odd cut
// at least alpha.
ValidationResult ValidateFractionalPM(const FracMatching& x,
                                      CutStats* stats = nullptr);

inline bool IsValid(const ValidationResult& r) {
  return std::holds_alternative<ValidationOk>(r);
}

std::string DescribeViolation(const Violation& v);

}  // namespace pmdecomp

#endif  // PMDECOMP_MINCUT_H_
