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

#ifndef PMDECOMP_GRAPH_H_
#define PMDECOMP_GRAPH_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pmdecomp {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..n-1. Edge endpoints are stored as
// (min, max) and edges keep the id of their position in the input list.
class Graph {
 public:
  Graph() = default;
  // Throws ArgumentError on self-loops, duplicate edges, or endpoints out of
  // range.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const { return incidence_[v]; }

  std::optional<EdgeId> FindEdge(Vertex a, Vertex b) const;
  Vertex Other(EdgeId e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  // True iff the subgraph formed by `edge_ids` admits a proper 2-coloring.
  bool IsBipartite(std::span<const EdgeId> edge_ids) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::map<std::pair<Vertex, Vertex>, EdgeId> index_;
};

}  // namespace pmdecomp

#endif  // PMDECOMP_GRAPH_H_
