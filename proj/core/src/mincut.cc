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

#include "pmdecomp/mincut.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <utility>

#include "flow_network.h"
#include "pmdecomp/errors.h"

namespace pmdecomp {
namespace {

using internal::CutTree;
using internal::FlowNetwork;
using internal::GusfieldTree;
using internal::IntEdge;

using BigEdges = std::vector<IntEdge<BigInt>>;

const BigInt& Int64Ceiling() {
  static const BigInt kCeiling = BigInt(1) << 62;
  return kCeiling;
}

BigInt ScaleFor(const CapacitatedGraph& g) {
  BigInt scale = 1;
  for (const auto& e : g.edges()) scale = Lcm(scale, e.capacity.denominator());
  return scale;
}

BigInt ToScaledInteger(const Rat& r, const BigInt& scale) {
  const Rat scaled = r * Rat(scale);
  PMDECOMP_CHECK(scaled.is_integer(), "scale does not clear denominator");
  return scaled.numerator();
}

BigEdges ScaleEdges(const CapacitatedGraph& g, const BigInt& scale) {
  BigEdges out;
  out.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    out.push_back({e.u, e.v, ToScaledInteger(e.capacity, scale)});
  }
  return out;
}

bool FitsInt64(const BigEdges& edges) {
  BigInt total = 0;
  for (const auto& e : edges) total += e.capacity;
  return total < Int64Ceiling();
}

std::vector<IntEdge<std::int64_t>> Narrow(const BigEdges& edges) {
  std::vector<IntEdge<std::int64_t>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back({e.u, e.v, e.capacity.get_si()});
  return out;
}

CutTree<BigInt> ComputeCutTree(int n, const BigEdges& edges,
                               CutStats* stats) {
  long long calls = 0;
  CutTree<BigInt> out;
  if (FitsInt64(edges)) {
    const auto small = GusfieldTree<std::int64_t>(n, Narrow(edges), &calls);
    out.parent = small.parent;
    out.weight.reserve(n);
    for (std::int64_t w : small.weight) out.weight.emplace_back(BigInt(static_cast<long>(w)));
  } else {
    out = GusfieldTree<BigInt>(n, edges, &calls);
  }
  if (stats) {
    stats->max_flow_calls += calls;
    ++stats->odd_cut_calls;
  }
  return out;
}

std::vector<std::vector<int>> ChildrenOf(const std::vector<int>& parent) {
  std::vector<std::vector<int>> children(parent.size());
  for (std::size_t v = 1; v < parent.size(); ++v) {
    children[parent[v]].push_back(static_cast<int>(v));
  }
  return children;
}

// Vertices of the tree in an order where every child precedes its parent.
std::vector<int> PostOrder(const std::vector<std::vector<int>>& children) {
  std::vector<int> order;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : children[v]) stack.push_back(c);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<char> Subtree(const std::vector<std::vector<int>>& children,
                          int root) {
  std::vector<char> in(children.size(), 0);
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    in[v] = 1;
    for (int c : children[v]) stack.push_back(c);
  }
  return in;
}

std::vector<Vertex> MembersOf(const std::vector<char>& in) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < in.size(); ++v) {
    if (in[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

// A fundamental cut of the cut tree that passed the caller's filter.
struct TreeCandidate {
  BigInt weight;
  std::vector<Vertex> members;
};

bool CandidateLess(const TreeCandidate& a, const TreeCandidate& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.members.size() != b.members.size()) {
    return a.members.size() < b.members.size();
  }
  return a.members < b.members;
}

// Padberg-Rao over a cut tree: every fundamental cut whose side holds an
// odd number of odd units, reported as the side not containing `exclude`.
template <typename Filter>
std::vector<TreeCandidate> OddTreeCuts(const CutTree<BigInt>& tree,
                                       std::span<const char> odd_unit,
                                       Vertex exclude, Filter&& keep) {
  const int n = static_cast<int>(tree.parent.size());
  const auto children = ChildrenOf(tree.parent);
  std::vector<int> parity(n, 0);
  std::vector<int> count(n, 0);
  for (int v : PostOrder(children)) {
    parity[v] = odd_unit[v] ? 1 : 0;
    count[v] = 1;
    for (int c : children[v]) {
      parity[v] ^= parity[c];
      count[v] += count[c];
    }
  }
  std::vector<TreeCandidate> out;
  for (int v = 1; v < n; ++v) {
    if (parity[v] == 0) continue;
    if (!keep(tree.weight[v], count[v])) continue;
    std::vector<char> in = Subtree(children, v);
    if (in[exclude]) {
      for (auto& c : in) c = !c;
    }
    out.push_back({tree.weight[v], MembersOf(in)});
  }
  return out;
}

// Tight sets whose cut edges share one vertex v: with every degree equal to
// alpha, all of v's edges enter S, so S + v is a union of support
// components. Such sets exist only when the support is disconnected.
std::optional<std::vector<Vertex>> DisconnectedTightSet(
    const CapacitatedGraph& g, std::span<const char> odd_unit,
    const Rat& alpha, Vertex exclude) {
  const int k = g.num_vertices();
  std::vector<int> comp(k, -1);
  std::vector<std::vector<Vertex>> adj(k);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    comps.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = static_cast<int>(comps.size()) - 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (Vertex w : adj[v]) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
  }
  if (comps.size() < 2) return std::nullopt;
  std::vector<Vertex> u;
  for (const auto& c : comps) {
    if (c.size() >= 4) {
      u = c;
      break;
    }
  }
  if (u.empty() && comps.size() >= 3) {
    u = comps[0];
    u.insert(u.end(), comps[1].begin(), comps[1].end());
  }
  if (u.empty()) return std::nullopt;
  std::sort(u.begin(), u.end());
  const auto at = std::find(u.begin(), u.end(), exclude);
  u.erase(at != u.end() ? at : u.end() - 1);
  const int size = static_cast<int>(u.size());
  if (size < 3 || k - size < 3) return std::nullopt;
  std::vector<char> in(k, 0);
  int odd = 0;
  for (Vertex v : u) {
    in[v] = 1;
    odd += odd_unit[v] ? 1 : 0;
  }
  if (odd % 2 == 0 || g.CutCapacity(in) != alpha) return std::nullopt;
  return u;
}

}  // namespace

CapacitatedGraph::CapacitatedGraph(int num_vertices,
                                   std::vector<CapacitatedEdge> edges)
    : num_vertices_(num_vertices) {
  if (num_vertices < 0) throw ArgumentError("negative vertex count");
  std::map<std::pair<Vertex, Vertex>, Rat> merged;
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw ArgumentError("capacitated edge endpoint out of range");
    }
    if (e.capacity.sign() < 0) {
      throw ArgumentError("negative capacity " + e.capacity.ToString());
    }
    if (e.u == e.v) continue;
    merged[std::minmax(e.u, e.v)] += e.capacity;
  }
  for (auto& [key, cap] : merged) {
    if (cap.sign() > 0) edges_.push_back({key.first, key.second, cap});
  }
}

CapacitatedGraph CapacitatedGraph::FromFracMatching(const FracMatching& x) {
  std::vector<CapacitatedEdge> edges;
  for (EdgeId e : SupportEdges(x)) {
    edges.push_back({x.graph().edge(e).u, x.graph().edge(e).v, x.value(e)});
  }
  return CapacitatedGraph(x.num_vertices(), std::move(edges));
}

Rat CapacitatedGraph::CutCapacity(std::span<const char> in_set) const {
  Rat total;
  for (const auto& e : edges_) {
    if (in_set[e.u] != in_set[e.v]) total += e.capacity;
  }
  return total;
}

MinCutResult MaxFlowMinCut(const CapacitatedGraph& g, Vertex s, Vertex t,
                           CutStats* stats) {
  const int n = g.num_vertices();
  if (s < 0 || t < 0 || s >= n || t >= n) {
    throw ArgumentError("terminal out of range");
  }
  if (s == t) throw ArgumentError("source equals sink");
  const BigInt scale = ScaleFor(g);
  const BigEdges big = ScaleEdges(g, scale);
  if (stats) ++stats->max_flow_calls;
  BigInt value;
  std::vector<char> side;
  if (FitsInt64(big)) {
    FlowNetwork<std::int64_t> net(n, Narrow(big));
    value = BigInt(static_cast<long>(net.MaxFlow(s, t)));
    side = net.SourceSide(s);
  } else {
    FlowNetwork<BigInt> net(n, big);
    value = net.MaxFlow(s, t);
    side = net.SourceSide(s);
  }
  return {Rat(value, scale), MembersOf(side)};
}

GomoryHuTree::GomoryHuTree(int num_vertices, std::vector<Vertex> parent,
                           std::vector<Rat> parent_weight)
    : parent_(std::move(parent)), weight_(std::move(parent_weight)) {
  if (static_cast<int>(parent_.size()) != num_vertices ||
      weight_.size() != parent_.size()) {
    throw ArgumentError("Gomory-Hu tree arrays disagree with vertex count");
  }
}

std::vector<GomoryHuEdge> GomoryHuTree::Edges() const {
  std::vector<GomoryHuEdge> out;
  for (int v = 1; v < num_vertices(); ++v) {
    out.push_back({v, parent_[v], weight_[v]});
  }
  return out;
}

Rat GomoryHuTree::MinCutValue(Vertex s, Vertex t) const {
  if (s == t) throw ArgumentError("MinCutValue needs distinct vertices");
  auto depth = [&](Vertex v) {
    int d = 0;
    while (v != 0) {
      v = parent_[v];
      ++d;
    }
    return d;
  };
  int ds = depth(s);
  int dt = depth(t);
  std::optional<Rat> best;
  auto take = [&](Vertex v) {
    if (!best || weight_[v] < *best) best = weight_[v];
  };
  while (ds > dt) { take(s); s = parent_[s]; --ds; }
  while (dt > ds) { take(t); t = parent_[t]; --dt; }
  while (s != t) {
    take(s);
    take(t);
    s = parent_[s];
    t = parent_[t];
  }
  return *best;
}

std::vector<char> GomoryHuTree::SubtreeOf(Vertex child) const {
  return Subtree(ChildrenOf(parent_), child);
}

GomoryHuTree BuildGomoryHuTree(const CapacitatedGraph& g, CutStats* stats) {
  const int n = g.num_vertices();
  const BigInt scale = ScaleFor(g);
  CutTree<BigInt> tree = ComputeCutTree(n, ScaleEdges(g, scale), stats);
  if (stats) --stats->odd_cut_calls;  // plain tree, not an odd-cut search
  std::vector<Rat> weights;
  weights.reserve(n);
  for (const BigInt& w : tree.weight) weights.emplace_back(w, scale);
  return GomoryHuTree(n, std::move(tree.parent), std::move(weights));
}

OddCutResult MinOddCut(const FracMatching& x, CutStats* stats) {
  const int n = x.num_vertices();
  if (n < 2 || n % 2 != 0) {
    throw ArgumentError("minimum odd cut needs an even vertex count >= 2");
  }
  const CapacitatedGraph g = CapacitatedGraph::FromFracMatching(x);
  const BigInt scale = ScaleFor(g);
  const CutTree<BigInt> tree = ComputeCutTree(n, ScaleEdges(g, scale), stats);
  const std::vector<char> units(n, 1);
  auto candidates = OddTreeCuts(tree, units, /*exclude=*/0,
                                [](const BigInt&, int) { return true; });
  PMDECOMP_CHECK(!candidates.empty(), "cut tree has no odd fundamental cut");
  const auto best =
      std::min_element(candidates.begin(), candidates.end(), CandidateLess);
  return {OddSet(n, best->members), Rat(best->weight, scale)};
}

std::optional<std::vector<Vertex>> FindTightOddSet(
    const CapacitatedGraph& g, std::span<const char> odd_unit,
    const Rat& alpha, Vertex exclude, CutStats* stats) {
  const int k = g.num_vertices();
  if (k < 6) return std::nullopt;
  if (static_cast<int>(odd_unit.size()) != k || exclude < 0 || exclude >= k) {
    throw ArgumentError("FindTightOddSet: bad unit vector or excluded vertex");
  }
  // All capacities and alpha are multiples of 1/L. Scaling by 2Lk turns
  // epsilon = 1/(2Lk) into 1, so two perturbed edges move a cut by at most
  // 2 < 2k, which cannot reorder cuts whose true capacities differ.
  BigInt l = Lcm(ScaleFor(g), alpha.denominator());
  const BigInt scale = 2 * l * k;
  const BigEdges base = ScaleEdges(g, scale);
  const BigInt alpha_scaled = ToScaledInteger(alpha, scale);

  auto qualifies = [&](const TreeCandidate& c) {
    std::vector<char> in(k, 0);
    for (Vertex v : c.members) in[v] = 1;
    BigInt cap = 0;
    for (const auto& e : base) {
      if (in[e.u] != in[e.v]) cap += e.capacity;
    }
    return cap == alpha_scaled;
  };
  auto search = [&](const BigEdges& edges) -> std::optional<std::vector<Vertex>> {
    const CutTree<BigInt> tree = ComputeCutTree(k, edges, stats);
    auto candidates = OddTreeCuts(
        tree, odd_unit, exclude, [&](const BigInt& w, int count) {
          return w <= alpha_scaled && count >= 3 && count <= k - 3;
        });
    std::sort(candidates.begin(), candidates.end(),
              [](const TreeCandidate& a, const TreeCandidate& b) {
                if (a.members.size() != b.members.size()) {
                  return a.members.size() < b.members.size();
                }
                return a.members < b.members;
              });
    for (const auto& c : candidates) {
      if (qualifies(c)) return c.members;
    }
    return std::nullopt;
  };

  // The unperturbed tree sometimes exposes a tight set directly.
  if (auto hit = search(base)) return hit;
  if (auto hit = DisconnectedTightSet(g, odd_unit, alpha, exclude)) return hit;
  BigEdges perturbed = base;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      const auto& e = base[i];
      const auto& f = base[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      perturbed[i].capacity -= 1;
      perturbed[j].capacity -= 1;
      auto hit = search(perturbed);
      perturbed[i].capacity = base[i].capacity;
      perturbed[j].capacity = base[j].capacity;
      if (hit) return hit;
    }
  }
  return std::nullopt;
}

std::optional<OddSet> FindTightOddCut(const FracMatching& x, CutStats* stats) {
  if (!IsValid(ValidateFractionalPM(x, stats))) {
    throw ArgumentError("FindTightOddCut: input is not an alpha-fractional "
                        "perfect matching");
  }
  const int n = x.num_vertices();
  const std::vector<char> units(n, 1);
  auto found = FindTightOddSet(CapacitatedGraph::FromFracMatching(x), units,
                               x.alpha(), /*exclude=*/0, stats);
  if (!found) return std::nullopt;
  return OddSet(n, std::move(*found));
}

ValidationResult ValidateFractionalPM(const FracMatching& x, CutStats* stats) {
  const int n = x.num_vertices();
  if (n % 2 != 0) return Violation{OddVertexCountViolation{n}};
  for (EdgeId e = 0; e < x.graph().num_edges(); ++e) {
    if (x.value(e).sign() < 0) {
      return Violation{NegativeEdgeViolation{e, x.value(e)}};
    }
  }
  const auto sums = DegreeSums(x);
  for (Vertex v = 0; v < n; ++v) {
    if (sums[v] != x.alpha()) return Violation{DegreeViolation{v, sums[v]}};
  }
  if (n == 0) return ValidationOk{};
  OddCutResult cut = MinOddCut(x, stats);
  if (cut.capacity < x.alpha()) {
    return Violation{OddCutViolation{std::move(cut.set), cut.capacity}};
  }
  return ValidationOk{};
}

std::string DescribeViolation(const Violation& v) {
  std::ostringstream os;
  std::visit(
      [&](const auto& item) {
        using T = std::decay_t<decltype(item)>;
        if constexpr (std::is_same_v<T, NegativeEdgeViolation>) {
          os << "edge " << item.edge << " has negative value " << item.value;
        } else if constexpr (std::is_same_v<T, DegreeViolation>) {
          os << "vertex " << item.vertex << " has degree sum "
             << item.degree_sum;
        } else if constexpr (std::is_same_v<T, OddCutViolation>) {
          os << "odd set " << item.set.ToString() << " has capacity "
             << item.capacity;
        } else {
          os << "odd vertex count " << item.num_vertices;
        }
      },
      v);
  return os.str();
}

}  // namespace pmdecomp
