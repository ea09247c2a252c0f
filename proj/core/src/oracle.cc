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

#include "pmdecomp/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "pmdecomp/errors.h"

namespace pmdecomp::oracle {
namespace {

void CheckSize(int n, int limit, const char* what) {
  if (n > limit) {
    throw SizeLimitError(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds the oracle limit " + std::to_string(limit));
  }
}

std::vector<Vertex> MaskMembers(std::uint32_t mask, int n) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (mask >> v & 1u) out.push_back(v);
  }
  return out;
}

template <typename EdgeRange, typename Value>
Rat MaskCut(std::uint32_t mask, const EdgeRange& edges, Value value) {
  Rat total;
  for (const auto& e : edges) {
    if ((mask >> e.u & 1u) != (mask >> e.v & 1u)) total += value(e);
  }
  return total;
}

struct ValuedEdge {
  Vertex u;
  Vertex v;
  Rat value;
  bool in_matching;
};

std::vector<ValuedEdge> Valued(const FracMatching& x,
                               const PerfectMatching* m = nullptr) {
  std::vector<ValuedEdge> out;
  std::vector<char> in_m(x.graph().num_edges(), 0);
  if (m) {
    for (EdgeId e : m->edges) in_m[e] = 1;
  }
  for (EdgeId e = 0; e < x.graph().num_edges(); ++e) {
    out.push_back({x.graph().edge(e).u, x.graph().edge(e).v, x.value(e),
                   in_m[e] != 0});
  }
  return out;
}

void Enumerate(const Graph& g, std::vector<char>& covered,
               std::vector<EdgeId>& current,
               std::vector<PerfectMatching>& out) {
  const int n = g.num_vertices();
  Vertex v = 0;
  while (v < n && covered[v]) ++v;
  if (v == n) {
    PerfectMatching pm{current};
    std::sort(pm.edges.begin(), pm.edges.end());
    out.push_back(std::move(pm));
    return;
  }
  covered[v] = 1;
  for (EdgeId e : g.incident(v)) {
    const Vertex w = g.Other(e, v);
    if (covered[w]) continue;
    covered[w] = 1;
    current.push_back(e);
    Enumerate(g, covered, current, out);
    current.pop_back();
    covered[w] = 0;
  }
  covered[v] = 0;
}

// Phase-one simplex on [A | I] z = b, b >= 0, minimizing the artificial sum.
// Returns the structural part of a basic feasible solution, or nullopt.
std::optional<std::vector<Rat>> PhaseOne(std::vector<std::vector<Rat>> a,
                                         std::vector<Rat> b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  const int total = cols + rows;
  std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(total + 1));
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) t[r][c] = a[r][c];
    t[r][cols + r] = 1;
    t[r][total] = b[r];
    basis[r] = cols + r;
  }
  auto cost = [&](int j) { return j >= cols ? Rat(1) : Rat(0); };
  for (;;) {
    int enter = -1;
    for (int j = 0; j < total && enter < 0; ++j) {
      Rat reduced = cost(j);
      for (int r = 0; r < rows; ++r) {
        if (!t[r][j].is_zero()) reduced -= cost(basis[r]) * t[r][j];
      }
      if (reduced.sign() < 0) enter = j;
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int r = 0; r < rows; ++r) {
      if (t[r][enter].sign() <= 0) continue;
      const Rat ratio = t[r][total] / t[r][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    PMDECOMP_CHECK(leave >= 0, "phase one is unbounded");
    const Rat pivot = t[leave][enter];
    for (Rat& v : t[leave]) v /= pivot;
    for (int r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter].is_zero()) continue;
      const Rat f = t[r][enter];
      for (int j = 0; j <= total; ++j) {
        if (!t[leave][j].is_zero()) t[r][j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
  }
  std::vector<Rat> z(cols);
  for (int r = 0; r < rows; ++r) {
    if (basis[r] >= cols) {
      if (!t[r][total].is_zero()) return std::nullopt;
    } else {
      z[basis[r]] = t[r][total];
    }
  }
  return z;
}

}  // namespace

std::vector<PerfectMatching> EnumeratePerfectMatchings(
    const Graph& g, const OracleLimits& limits) {
  CheckSize(g.num_vertices(), limits.max_n_enumeration,
            "EnumeratePerfectMatchings");
  std::vector<PerfectMatching> out;
  if (g.num_vertices() % 2 != 0) return out;
  std::vector<char> covered(g.num_vertices(), 0);
  std::vector<EdgeId> current;
  Enumerate(g, covered, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<OddCutResult> BruteMinOddCut(const FracMatching& x,
                                           int min_size,
                                           const OracleLimits& limits) {
  const int n = x.num_vertices();
  CheckSize(n, limits.max_n_subsets, "BruteMinOddCut");
  if (n % 2 != 0 || n < 2) {
    throw ArgumentError("BruteMinOddCut: needs an even vertex count >= 2");
  }
  const auto edges = Valued(x);
  std::optional<OddCutResult> best;
  std::vector<Vertex> best_members;
  // Sets avoid vertex 0, so every cut is seen once.
  for (std::uint32_t mask = 2; mask < (1u << n); mask += 2) {
    const int size = std::popcount(mask);
    if (size % 2 == 0 || size < min_size || n - size < min_size) continue;
    const Rat cap =
        MaskCut(mask, edges, [](const ValuedEdge& e) { return e.value; });
    std::vector<Vertex> members = MaskMembers(mask, n);
    const bool better =
        !best || cap < best->capacity ||
        (cap == best->capacity &&
         (members.size() < best_members.size() ||
          (members.size() == best_members.size() && members < best_members)));
    if (better) {
      best = OddCutResult{OddSet(n, members), cap};
      best_members = std::move(members);
    }
  }
  return best;
}

std::optional<Decomposition> BruteDecompose(const FracMatching& x,
                                            const OracleLimits& limits) {
  CheckSize(x.num_vertices(), limits.max_n_enumeration, "BruteDecompose");
  for (const Rat& v : x.values()) {
    if (v.sign() < 0) return std::nullopt;
  }
  if (x.alpha().is_zero()) {
    if (x.IsZero()) return Decomposition{};
    return std::nullopt;
  }
  const std::vector<EdgeId> support = SupportEdges(x);
  std::vector<Edge> sub_edges;
  for (EdgeId e : support) sub_edges.push_back(x.graph().edge(e));
  const Graph sub(x.num_vertices(), std::move(sub_edges));
  std::vector<PerfectMatching> pms = EnumeratePerfectMatchings(sub, limits);
  for (auto& pm : pms) {
    for (EdgeId& e : pm.edges) e = support[e];
  }
  if (pms.empty()) return std::nullopt;
  const int rows = static_cast<int>(support.size()) + 1;
  const int cols = static_cast<int>(pms.size());
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  std::vector<Rat> b(rows);
  for (int c = 0; c < cols; ++c) {
    for (EdgeId e : pms[c].edges) {
      const auto it = std::lower_bound(support.begin(), support.end(), e);
      a[it - support.begin()][c] = 1;
    }
    a[rows - 1][c] = 1;
  }
  for (int r = 0; r + 1 < rows; ++r) b[r] = x.value(support[r]);
  b[rows - 1] = x.alpha();
  auto z = PhaseOne(std::move(a), std::move(b));
  if (!z) return std::nullopt;
  Decomposition d;
  for (int c = 0; c < cols; ++c) {
    if ((*z)[c].sign() > 0) d.terms.push_back(Term{(*z)[c], pms[c]});
  }
  return d;
}

std::optional<Rat> BruteGamma(const Rat& alpha, const FracMatching& y,
                              const PerfectMatching& m,
                              const OracleLimits& limits) {
  const int n = y.num_vertices();
  CheckSize(n, limits.max_n_subsets, "BruteGamma");
  const auto edges = Valued(y, &m);
  std::optional<Rat> best;
  for (std::uint32_t mask = 1; mask < (1u << n) - 1; ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    int k = 0;
    Rat cap;
    for (const auto& e : edges) {
      if ((mask >> e.u & 1u) == (mask >> e.v & 1u)) continue;
      cap += e.value;
      if (e.in_matching) ++k;
    }
    if (k < 2) continue;
    const Rat g = (cap - alpha) / Rat(k - 1);
    if (!best || g < *best) best = g;
  }
  return best;
}

std::vector<std::vector<Rat>> BruteAllPairsMinCut(const CapacitatedGraph& g,
                                                  const OracleLimits& limits) {
  const int n = g.num_vertices();
  CheckSize(n, limits.max_n_subsets, "BruteAllPairsMinCut");
  std::vector<std::vector<std::optional<Rat>>> best(
      n, std::vector<std::optional<Rat>>(n));
  for (std::uint32_t mask = 2; n > 0 && mask < (1u << n); mask += 2) {
    const Rat cap = MaskCut(mask, g.edges(),
                            [](const CapacitatedEdge& e) { return e.capacity; });
    for (Vertex s = 0; s < n; ++s) {
      if (mask >> s & 1u) continue;
      for (Vertex t = 0; t < n; ++t) {
        if (!(mask >> t & 1u)) continue;
        if (!best[s][t] || cap < *best[s][t]) {
          best[s][t] = cap;
          best[t][s] = cap;
        }
      }
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (best[s][t]) out[s][t] = *best[s][t];
    }
  }
  return out;
}

std::vector<OddSet> BruteTightOddCuts(const FracMatching& x,
                                      const OracleLimits& limits) {
  const int n = x.num_vertices();
  CheckSize(n, limits.max_n_subsets, "BruteTightOddCuts");
  const auto edges = Valued(x);
  std::vector<OddSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n) - 1; ++mask) {
    const int size = std::popcount(mask);
    if (size % 2 == 0 || size < 3 || n - size < 3) continue;
    const Rat cap =
        MaskCut(mask, edges, [](const ValuedEdge& e) { return e.value; });
    if (cap == x.alpha()) out.emplace_back(n, MaskMembers(mask, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pmdecomp::oracle
