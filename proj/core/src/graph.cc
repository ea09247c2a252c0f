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

#include "pmdecomp/graph.h"

#include <algorithm>
#include <string>

#include "pmdecomp/errors.h"

namespace pmdecomp {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      incidence_(num_vertices < 0 ? 0 : num_vertices) {
  if (num_vertices < 0) throw ArgumentError("negative vertex count");
  for (EdgeId id = 0; id < num_edges(); ++id) {
    Edge& e = edges_[id];
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw ArgumentError("edge endpoint out of range in edge " +
                          std::to_string(id));
    }
    if (e.u == e.v) {
      throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!index_.emplace(std::make_pair(e.u, e.v), id).second) {
      throw ArgumentError("duplicate edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ")");
    }
    incidence_[e.u].push_back(id);
    incidence_[e.v].push_back(id);
  }
}

std::optional<EdgeId> Graph::FindEdge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  const auto it = index_.find({a, b});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::IsBipartite(std::span<const EdgeId> edge_ids) const {
  std::vector<std::vector<Vertex>> adj(num_vertices_);
  for (EdgeId e : edge_ids) {
    adj[edges_[e].u].push_back(edges_[e].v);
    adj[edges_[e].v].push_back(edges_[e].u);
  }
  std::vector<int> color(num_vertices_, -1);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < num_vertices_; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace pmdecomp
