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

#include "pmdecomp/laminar.h"

#include <algorithm>
#include <deque>

#include "pmdecomp/errors.h"

namespace pmdecomp {
namespace {

// The graph seen from one tree node S: V - S, each child of S, and each
// vertex of S outside every child become single units.
struct ContractedView {
  std::vector<std::vector<Vertex>> units;  // original vertices per unit
  std::vector<int> unit_of;                // original vertex -> unit
  int outside = -1;                        // unit holding V - S, if any
};

ContractedView Contract(const LaminarFamily& family, int node) {
  const int n = family.num_vertices();
  ContractedView view;
  view.unit_of.assign(n, -1);
  std::vector<char> in_node(n, node == LaminarFamily::kRoot ? 1 : 0);
  if (node != LaminarFamily::kRoot) {
    for (Vertex v : family.set(node).members()) in_node[v] = 1;
  }
  // Units are listed by smallest original vertex.
  std::vector<std::vector<Vertex>> groups;
  for (int child : family.ChildrenOf(node)) {
    const auto m = family.set(child).members();
    groups.emplace_back(m.begin(), m.end());
  }
  std::vector<char> taken(n, 0);
  for (const auto& g : groups) {
    for (Vertex v : g) taken[v] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_node[v] && !taken[v]) groups.push_back({v});
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  if (node != LaminarFamily::kRoot) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_node[v]) rest.push_back(v);
    }
    groups.push_back(std::move(rest));
    view.outside = static_cast<int>(groups.size()) - 1;
  }
  view.units = std::move(groups);
  for (int u = 0; u < static_cast<int>(view.units.size()); ++u) {
    for (Vertex v : view.units[u]) view.unit_of[v] = u;
  }
  return view;
}

// Looks for one new tight odd cut strictly inside `node` and laminar with
// the family. Returns it in original vertices.
std::optional<OddSet> SearchNode(const LaminarFamily& family, int node,
                                 const FracMatching& x, CutStats* stats) {
  const ContractedView view = Contract(family, node);
  const int k = static_cast<int>(view.units.size());
  if (k < 6) return std::nullopt;
  std::vector<CapacitatedEdge> edges;
  for (EdgeId e : SupportEdges(x)) {
    const int a = view.unit_of[x.graph().edge(e).u];
    const int b = view.unit_of[x.graph().edge(e).v];
    if (a != b) edges.push_back({a, b, x.value(e)});
  }
  const CapacitatedGraph contracted(k, std::move(edges));
  const std::vector<char> odd_units(k, 1);
  const Vertex exclude = view.outside >= 0 ? view.outside : 0;
  auto found =
      FindTightOddSet(contracted, odd_units, x.alpha(), exclude, stats);
  if (!found) return std::nullopt;
  std::vector<Vertex> members;
  for (int u : *found) {
    members.insert(members.end(), view.units[u].begin(), view.units[u].end());
  }
  PMDECOMP_CHECK(members.size() % 2 == 1,
                 "expanded tight set has even cardinality");
  OddSet t(x.num_vertices(), std::move(members));
  if (node != LaminarFamily::kRoot) {
    PMDECOMP_CHECK(t.IsSubsetOf(family.set(node)),
                   "expanded tight set escapes its tree node");
    PMDECOMP_CHECK((family.set(node).size() - t.size()) % 2 == 0,
                   "odd remainder inside tree node");
  }
  return t;
}

std::optional<OddSet> RootComplement(const LaminarFamily& family) {
  const std::vector<int> roots = family.ChildrenOf(LaminarFamily::kRoot);
  if (roots.empty()) return std::nullopt;
  const OddSet& first = family.set(roots.front());
  if (family.num_vertices() - first.size() < 3) return std::nullopt;
  OddSet c = first.Complement();
  if (family.Contains(c) || !family.IsLaminarWith(c)) return std::nullopt;
  return c;
}

void GrowToMaximal(LaminarFamily& family, const FracMatching& x,
                   CutStats* stats) {
  std::deque<int> queue{LaminarFamily::kRoot};
  for (int i : family.TopDownOrder()) queue.push_back(i);
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop_front();
    while (auto t = SearchNode(family, node, x, stats)) {
      queue.push_back(family.Insert(std::move(*t)));
    }
    if (node == LaminarFamily::kRoot) {
      // V - C is tight with C and laminar with every other member; after it
      // joins, C and V - C are the only root children.
      if (auto c = RootComplement(family)) {
        queue.push_back(family.Insert(std::move(*c)));
      }
    }
  }
}

}  // namespace

std::vector<int> LaminarFamily::ChildrenOf(int node) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (parent_[i] == node) out.push_back(i);
  }
  return out;
}

std::vector<int> LaminarFamily::TopDownOrder() const {
  std::vector<int> order;
  std::deque<int> queue{kRoot};
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop_front();
    for (int c : ChildrenOf(node)) {
      order.push_back(c);
      queue.push_back(c);
    }
  }
  return order;
}

bool LaminarFamily::IsLaminarWith(const OddSet& s) const {
  return std::all_of(sets_.begin(), sets_.end(), [&](const OddSet& m) {
    return m.IsDisjointFrom(s) || m.IsSubsetOf(s) || s.IsSubsetOf(m);
  });
}

bool LaminarFamily::Contains(const OddSet& s) const {
  return std::find(sets_.begin(), sets_.end(), s) != sets_.end();
}

int LaminarFamily::Insert(OddSet s) {
  PMDECOMP_CHECK(s.num_vertices() == num_vertices_, "vertex count mismatch");
  PMDECOMP_CHECK(s.size() >= 3, "laminar members need at least 3 vertices");
  PMDECOMP_CHECK(!Contains(s), "set already in family: " + s.ToString());
  PMDECOMP_CHECK(IsLaminarWith(s), "set crosses a member: " + s.ToString());
  int parent = kRoot;
  for (int i = 0; i < size(); ++i) {
    if (s.IsSubsetOf(sets_[i]) &&
        (parent == kRoot || sets_[i].size() < sets_[parent].size())) {
      parent = i;
    }
  }
  const int id = size();
  for (int i = 0; i < size(); ++i) {
    if (parent_[i] == parent && sets_[i].IsSubsetOf(s)) parent_[i] = id;
  }
  sets_.push_back(std::move(s));
  parent_.push_back(parent);
  return id;
}

LaminarFamily BuildMaximalLaminar(const FracMatching& x, CutStats* stats) {
  if (!IsValid(ValidateFractionalPM(x, stats))) {
    throw ArgumentError("BuildMaximalLaminar: input is not an "
                        "alpha-fractional perfect matching");
  }
  LaminarFamily family(x.num_vertices(), x.alpha());
  GrowToMaximal(family, x, stats);
  CheckLaminarInvariants(family, &x);
  return family;
}

LaminarFamily UpdateLaminar(const LaminarFamily& family, const FracMatching& x,
                            CutStats* stats) {
  PMDECOMP_CHECK(family.num_vertices() == x.num_vertices(),
                 "family and vector disagree on vertex count");
  for (const OddSet& s : family.sets()) {
    PMDECOMP_CHECK(CutCapacity(x, s) == x.alpha(),
                   "member " + s.ToString() + " is not tight at alpha " +
                       x.alpha().ToString());
  }
  LaminarFamily out = family;
  out.set_alpha(x.alpha());
  GrowToMaximal(out, x, stats);
  CheckLaminarInvariants(out, &x);
  return out;
}

std::vector<int> EdgeWeights(const LaminarFamily& family, const Graph& g) {
  std::vector<int> w(g.num_edges(), 0);
  for (const OddSet& s : family.sets()) {
    const auto in = s.Indicator();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (in[g.edge(e).u] != in[g.edge(e).v]) ++w[e];
    }
  }
  return w;
}

int Crossings(const OddSet& s, const PerfectMatching& m, const Graph& g) {
  int count = 0;
  for (EdgeId e : m.edges) {
    if (s.Contains(g.edge(e).u) != s.Contains(g.edge(e).v)) ++count;
  }
  return count;
}

void CheckLaminarInvariants(const LaminarFamily& family,
                            const FracMatching* x) {
  const int n = family.num_vertices();
  PMDECOMP_CHECK(family.size() <= std::max(0, n / 2 - 1),
                 "laminar family exceeds n/2 - 1 members");
  for (int i = 0; i < family.size(); ++i) {
    const OddSet& a = family.set(i);
    PMDECOMP_CHECK(a.size() >= 3 && a.size() % 2 == 1, "bad member size");
    for (int j = i + 1; j < family.size(); ++j) {
      const OddSet& b = family.set(j);
      PMDECOMP_CHECK(a.IsDisjointFrom(b) || a.IsSubsetOf(b) || b.IsSubsetOf(a),
                     "members " + a.ToString() + " and " + b.ToString() +
                         " cross");
      PMDECOMP_CHECK(a != b, "duplicate member");
    }
    // Parent is the smallest strict superset.
    int expected = LaminarFamily::kRoot;
    for (int j = 0; j < family.size(); ++j) {
      if (j != i && a.IsSubsetOf(family.set(j)) &&
          (expected == LaminarFamily::kRoot ||
           family.set(j).size() < family.set(expected).size())) {
        expected = j;
      }
    }
    PMDECOMP_CHECK(family.parent(i) == expected, "inconsistent tree parent");
    if (x) {
      PMDECOMP_CHECK(CutCapacity(*x, a) == x->alpha(),
                     "member " + a.ToString() + " not tight");
    }
  }
}

}  // namespace pmdecomp
