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

#include "pmdecomp/fractional.h"

#include <algorithm>

#include "pmdecomp/errors.h"

namespace pmdecomp {

OddSet::OddSet(int num_vertices, std::vector<Vertex> members)
    : num_vertices_(num_vertices), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw ArgumentError("odd set has repeated members");
  }
  if (!members_.empty() &&
      (members_.front() < 0 || members_.back() >= num_vertices)) {
    throw ArgumentError("odd set member out of range");
  }
  if (members_.size() % 2 == 0) {
    throw ArgumentError("odd set must have odd cardinality (got " +
                        std::to_string(members_.size()) + ")");
  }
  if (size() >= num_vertices) {
    throw ArgumentError("odd set must be a proper subset of the vertices");
  }
}

bool OddSet::Contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> OddSet::Indicator() const {
  std::vector<char> in(num_vertices_, 0);
  for (Vertex v : members_) in[v] = 1;
  return in;
}

OddSet OddSet::Complement() const {
  std::vector<Vertex> rest;
  rest.reserve(num_vertices_ - size());
  const auto in = Indicator();
  for (Vertex v = 0; v < num_vertices_; ++v) {
    if (!in[v]) rest.push_back(v);
  }
  return OddSet(num_vertices_, std::move(rest));
}

bool OddSet::IsSubsetOf(const OddSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool OddSet::IsDisjointFrom(const OddSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

std::string OddSet::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

bool IsPerfectMatching(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<int> covered(g.num_vertices(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    if (++covered[g.edge(e).u] > 1 || ++covered[g.edge(e).v] > 1) return false;
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](int c) { return c == 1; });
}

FracMatching::FracMatching(std::shared_ptr<const Graph> graph,
                           std::vector<Rat> values, Rat alpha)
    : graph_(std::move(graph)),
      values_(std::move(values)),
      alpha_(std::move(alpha)) {
  if (!graph_) throw ArgumentError("null graph");
  if (static_cast<int>(values_.size()) != graph_->num_edges()) {
    throw ArgumentError("value vector length " +
                        std::to_string(values_.size()) +
                        " does not match edge count " +
                        std::to_string(graph_->num_edges()));
  }
  if (alpha_ < Rat(0) || alpha_ > Rat(1)) {
    throw ArgumentError("alpha must lie in [0, 1], got " + alpha_.ToString());
  }
}

FracMatching::FracMatching(Graph graph, std::vector<Rat> values, Rat alpha)
    : FracMatching(std::make_shared<const Graph>(std::move(graph)),
                   std::move(values), std::move(alpha)) {}

bool FracMatching::IsZero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rat& v) { return v.is_zero(); });
}

Rat Decomposition::TotalCoefficient() const {
  Rat total;
  for (const Term& t : terms) total += t.coeff;
  return total;
}

std::vector<EdgeId> SupportEdges(const FracMatching& x) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < x.graph().num_edges(); ++e) {
    if (x.value(e).sign() > 0) out.push_back(e);
  }
  return out;
}

Graph Support(const FracMatching& x) {
  std::vector<Edge> edges;
  for (EdgeId e : SupportEdges(x)) edges.push_back(x.graph().edge(e));
  return Graph(x.num_vertices(), std::move(edges));
}

Rat CutCapacity(const FracMatching& x, const OddSet& s) {
  if (s.num_vertices() != x.num_vertices()) {
    throw ArgumentError("odd set and graph disagree on vertex count");
  }
  const auto in = s.Indicator();
  Rat total;
  for (EdgeId e = 0; e < x.graph().num_edges(); ++e) {
    const Edge& ed = x.graph().edge(e);
    if (in[ed.u] != in[ed.v] && x.value(e).sign() > 0) total += x.value(e);
  }
  return total;
}

std::vector<Rat> DegreeSums(const FracMatching& x) {
  std::vector<Rat> sums(x.num_vertices());
  for (EdgeId e = 0; e < x.graph().num_edges(); ++e) {
    sums[x.graph().edge(e).u] += x.value(e);
    sums[x.graph().edge(e).v] += x.value(e);
  }
  return sums;
}

FracMatching SubtractMatching(const FracMatching& y, const PerfectMatching& m,
                              const Rat& b) {
  if (b.sign() < 0) throw ArgumentError("negative coefficient " + b.ToString());
  if (!IsPerfectMatching(y.graph(), m.edges)) {
    throw ArgumentError("SubtractMatching: not a perfect matching");
  }
  std::vector<Rat> values(y.values().begin(), y.values().end());
  if (b.is_zero()) return y;
  for (EdgeId e : m.edges) {
    if (values[e] < b) {
      throw ArgumentError("coefficient " + b.ToString() +
                          " exceeds value " + values[e].ToString() +
                          " of matching edge " + std::to_string(e));
    }
    values[e] -= b;
  }
  return FracMatching(y.shared_graph(), std::move(values), y.alpha() - b);
}

BigInt MaxDenominator(const FracMatching& x) {
  BigInt best = 1;
  for (const Rat& v : x.values()) {
    if (v.sign() > 0 && v.denominator() > best) best = v.denominator();
  }
  return best;
}

BigInt CommonDenominator(const FracMatching& x) {
  return Lcm(CommonDenominator(x.values()), x.alpha().denominator());
}

}  // namespace pmdecomp
