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

// Internal integer max-flow (Dinic) and Gusfield's Gomory-Hu construction,
// templated on the capacity type (std::int64_t or BigInt).

#ifndef PMDECOMP_SRC_FLOW_NETWORK_H_
#define PMDECOMP_SRC_FLOW_NETWORK_H_

#include <algorithm>
#include <queue>
#include <vector>

namespace pmdecomp::internal {

template <typename Cap>
struct IntEdge {
  int u;
  int v;
  Cap capacity;
};

template <typename Cap>
class FlowNetwork {
 public:
  FlowNetwork(int num_vertices, const std::vector<IntEdge<Cap>>& edges)
      : head_(num_vertices, -1), level_(num_vertices), iter_(num_vertices) {
    arcs_.reserve(2 * edges.size());
    total_ = Cap(0);
    for (const auto& e : edges) {
      AddArc(e.u, e.v, e.capacity);
      AddArc(e.v, e.u, e.capacity);
      total_ += e.capacity;
    }
  }

  // Max-flow value from s to t; resets any previous flow.
  Cap MaxFlow(int s, int t) {
    for (Arc& a : arcs_) a.residual = a.capacity;
    Cap flow(0);
    while (Bfs(s, t)) {
      for (std::size_t v = 0; v < head_.size(); ++v) iter_[v] = head_[v];
      while (true) {
        Cap pushed = Dfs(s, t, total_ + Cap(1));
        if (pushed == Cap(0)) break;
        flow += pushed;
      }
    }
    return flow;
  }

  // Vertices reachable from s in the residual graph of the last MaxFlow.
  std::vector<char> SourceSide(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
        const int w = arcs_[a].to;
        if (!seen[w] && arcs_[a].residual > Cap(0)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    Cap capacity;
    Cap residual;
  };

  void AddArc(int u, int v, const Cap& c) {
    arcs_.push_back(Arc{v, head_[u], c, c});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
  }

  bool Bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
        const int w = arcs_[a].to;
        if (level_[w] < 0 && arcs_[a].residual > Cap(0)) {
          level_[w] = level_[v] + 1;
          q.push(w);
        }
      }
    }
    return level_[t] >= 0;
  }

  Cap Dfs(int v, int t, const Cap& limit) {
    if (v == t) return limit;
    for (int& a = iter_[v]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.residual > Cap(0) && level_[arc.to] == level_[v] + 1) {
        Cap pushed = Dfs(arc.to, t, std::min<Cap>(limit, arc.residual));
        if (pushed > Cap(0)) {
          arc.residual -= pushed;
          // Arcs are added in pairs, so a ^ 1 is the reverse arc.
          arcs_[a ^ 1].residual += pushed;
          return pushed;
        }
      }
    }
    return Cap(0);
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
  Cap total_;
};

template <typename Cap>
struct CutTree {
  std::vector<int> parent;  // parent[0] == 0 is the root
  std::vector<Cap> weight;  // weight of edge (v, parent[v])
};

// Gusfield's algorithm; produces a Gomory-Hu cut tree with n - 1 max-flow
// computations and no graph contraction.
template <typename Cap>
CutTree<Cap> GusfieldTree(int n, const std::vector<IntEdge<Cap>>& edges,
                          long long* flow_calls) {
  CutTree<Cap> tree{std::vector<int>(n, 0), std::vector<Cap>(n, Cap(0))};
  if (n <= 1) return tree;
  FlowNetwork<Cap> net(n, edges);
  auto& p = tree.parent;
  auto& fl = tree.weight;
  for (int s = 1; s < n; ++s) {
    const int t = p[s];
    const Cap value = net.MaxFlow(s, t);
    if (flow_calls) ++*flow_calls;
    const std::vector<char> side = net.SourceSide(s);
    fl[s] = value;
    for (int i = 0; i < n; ++i) {
      if (i != s && side[i] && p[i] == t) p[i] = s;
    }
    if (side[p[t]]) {
      p[s] = p[t];
      p[t] = s;
      fl[s] = fl[t];
      fl[t] = value;
    }
  }
  return tree;
}

}  // namespace pmdecomp::internal

#endif  // PMDECOMP_SRC_FLOW_NETWORK_H_
