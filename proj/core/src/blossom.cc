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

// Maximum-weight maximum-cardinality matching following Galil's O(n^3)
// presentation of Edmonds' blossom algorithm. A minimum-weight perfect
// matching is obtained by maximizing (W - w) over maximum-cardinality
// matchings, W = max weight.
//
// Conventions: edge k has endpoints 2k (= edges[k].u) and 2k + 1
// (= edges[k].v); "p ^ 1" flips to the other endpoint. Vertex duals are
// stored doubled so every slack and dual stays an integer.

#include "pmdecomp/blossom.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "pmdecomp/errors.h"

namespace pmdecomp {
namespace {

class BlossomMatcher {
 public:
  BlossomMatcher(int n, std::vector<Edge> edges,
                 std::vector<std::int64_t> weights)
      : n_(n), edges_(std::move(edges)), weight_(std::move(weights)) {}

  // mate[v] = partner vertex or -1.
  std::vector<int> Solve();

 private:
  std::int64_t Slack(int k) const {
    return dual_[edges_[k].u] + dual_[edges_[k].v] - 2 * weight_[k];
  }
  int Endpoint(int p) const { return p % 2 == 0 ? edges_[p / 2].u : edges_[p / 2].v; }

  void Leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : childs_[b]) Leaves(t, out);
  }
  std::vector<int> Leaves(int b) const {
    std::vector<int> out;
    Leaves(b, out);
    return out;
  }

  static int Wrap(int j, int len) { return ((j % len) + len) % len; }

  void AssignLabel(int w, int t, int p);
  int ScanBlossom(int v, int w);
  void AddBlossom(int base, int k);
  void ExpandBlossom(int b, bool endstage);
  void AugmentBlossom(int b, int v);
  void AugmentMatching(int k);

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> weight_;

  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> childs_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> endps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dual_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

void BlossomMatcher::AssignLabel(int w, int t, int p) {
  const int b = inblossom_[w];
  PMDECOMP_CHECK(label_[w] == 0 && label_[b] == 0, "relabeling vertex");
  label_[w] = label_[b] = t;
  labelend_[w] = labelend_[b] = p;
  bestedge_[w] = bestedge_[b] = -1;
  if (t == 1) {
    Leaves(b, queue_);
  } else if (t == 2) {
    const int base = blossombase_[b];
    PMDECOMP_CHECK(mate_[base] >= 0, "T-blossom base is unmatched");
    AssignLabel(Endpoint(mate_[base]), 1, mate_[base] ^ 1);
  }
}

int BlossomMatcher::ScanBlossom(int v, int w) {
  std::vector<int> path;
  int base = -1;
  while (v != -1 || w != -1) {
    int b = inblossom_[v];
    if (label_[b] & 4) {
      base = blossombase_[b];
      break;
    }
    path.push_back(b);
    label_[b] = 5;
    if (labelend_[b] == -1) {
      v = -1;
    } else {
      v = Endpoint(labelend_[b]);
      b = inblossom_[v];
      v = Endpoint(labelend_[b]);
    }
    if (w != -1) std::swap(v, w);
  }
  for (int b : path) label_[b] = 1;
  return base;
}

void BlossomMatcher::AddBlossom(int base, int k) {
  int v = edges_[k].u;
  int w = edges_[k].v;
  const int bb = inblossom_[base];
  int bv = inblossom_[v];
  int bw = inblossom_[w];
  const int b = unused_.back();
  unused_.pop_back();
  blossombase_[b] = base;
  blossomparent_[b] = -1;
  blossomparent_[bb] = b;
  std::vector<int>& path = childs_[b];
  std::vector<int>& endps = endps_[b];
  path.clear();
  endps.clear();
  while (bv != bb) {
    blossomparent_[bv] = b;
    path.push_back(bv);
    endps.push_back(labelend_[bv]);
    v = Endpoint(labelend_[bv]);
    bv = inblossom_[v];
  }
  path.push_back(bb);
  std::reverse(path.begin(), path.end());
  std::reverse(endps.begin(), endps.end());
  endps.push_back(2 * k);
  while (bw != bb) {
    blossomparent_[bw] = b;
    path.push_back(bw);
    endps.push_back(labelend_[bw] ^ 1);
    w = Endpoint(labelend_[bw]);
    bw = inblossom_[w];
  }
  label_[b] = 1;
  labelend_[b] = labelend_[bb];
  dual_[b] = 0;
  for (int leaf : Leaves(b)) {
    if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
    inblossom_[leaf] = b;
  }
  std::vector<int> bestedgeto(2 * n_, -1);
  for (int child : path) {
    std::vector<std::vector<int>> nblists;
    if (!has_bestedges_[child]) {
      for (int leaf : Leaves(child)) {
        std::vector<int> list;
        for (int p : neighbend_[leaf]) list.push_back(p / 2);
        nblists.push_back(std::move(list));
      }
    } else {
      nblists.push_back(blossombestedges_[child]);
    }
    for (const auto& nblist : nblists) {
      for (int kk : nblist) {
        int i = edges_[kk].u;
        int j = edges_[kk].v;
        if (inblossom_[j] == b) std::swap(i, j);
        const int bj = inblossom_[j];
        if (bj != b && label_[bj] == 1 &&
            (bestedgeto[bj] == -1 || Slack(kk) < Slack(bestedgeto[bj]))) {
          bestedgeto[bj] = kk;
        }
      }
    }
    blossombestedges_[child].clear();
    has_bestedges_[child] = 0;
    bestedge_[child] = -1;
  }
  blossombestedges_[b].clear();
  for (int kk : bestedgeto) {
    if (kk != -1) blossombestedges_[b].push_back(kk);
  }
  has_bestedges_[b] = 1;
  bestedge_[b] = -1;
  for (int kk : blossombestedges_[b]) {
    if (bestedge_[b] == -1 || Slack(kk) < Slack(bestedge_[b])) {
      bestedge_[b] = kk;
    }
  }
}

void BlossomMatcher::ExpandBlossom(int b, bool endstage) {
  // Copy: recursive expansion reuses the child slots.
  const std::vector<int> children = childs_[b];
  for (int s : children) {
    blossomparent_[s] = -1;
    if (s < n_) {
      inblossom_[s] = s;
    } else if (endstage && dual_[s] == 0) {
      ExpandBlossom(s, endstage);
    } else {
      for (int leaf : Leaves(s)) inblossom_[leaf] = s;
    }
  }
  if (!endstage && label_[b] == 2) {
    const auto& ch = childs_[b];
    const auto& ep = endps_[b];
    const int len = static_cast<int>(ch.size());
    const int entrychild = inblossom_[Endpoint(labelend_[b] ^ 1)];
    int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) -
                             ch.begin());
    int jstep;
    int endptrick;
    if (j & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    int p = labelend_[b];
    while (j != 0) {
      label_[Endpoint(p ^ 1)] = 0;
      label_[Endpoint(ep[Wrap(j - endptrick, len)] ^ endptrick ^ 1)] = 0;
      AssignLabel(Endpoint(p ^ 1), 2, p);
      allowedge_[ep[Wrap(j - endptrick, len)] / 2] = 1;
      j += jstep;
      p = ep[Wrap(j - endptrick, len)] ^ endptrick;
      allowedge_[p / 2] = 1;
      j += jstep;
    }
    int bv = ch[Wrap(j, len)];
    label_[Endpoint(p ^ 1)] = label_[bv] = 2;
    labelend_[Endpoint(p ^ 1)] = labelend_[bv] = p;
    bestedge_[bv] = -1;
    j += jstep;
    while (ch[Wrap(j, len)] != entrychild) {
      bv = ch[Wrap(j, len)];
      if (label_[bv] == 1) {
        j += jstep;
        continue;
      }
      int labeled = -1;
      for (int leaf : Leaves(bv)) {
        if (label_[leaf] != 0) {
          labeled = leaf;
          break;
        }
      }
      if (labeled >= 0) {
        label_[labeled] = 0;
        label_[Endpoint(mate_[blossombase_[bv]])] = 0;
        AssignLabel(labeled, 2, labelend_[labeled]);
      }
      j += jstep;
    }
  }
  label_[b] = labelend_[b] = -1;
  childs_[b].clear();
  endps_[b].clear();
  blossombase_[b] = -1;
  blossombestedges_[b].clear();
  has_bestedges_[b] = 0;
  bestedge_[b] = -1;
  unused_.push_back(b);
}

void BlossomMatcher::AugmentBlossom(int b, int v) {
  int t = v;
  while (blossomparent_[t] != b) t = blossomparent_[t];
  if (t >= n_) AugmentBlossom(t, v);
  auto& ch = childs_[b];
  auto& ep = endps_[b];
  const int len = static_cast<int>(ch.size());
  const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) -
                                 ch.begin());
  int j = i;
  int jstep;
  int endptrick;
  if (i & 1) {
    j -= len;
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  while (j != 0) {
    j += jstep;
    t = ch[Wrap(j, len)];
    const int p = ep[Wrap(j - endptrick, len)] ^ endptrick;
    if (t >= n_) AugmentBlossom(t, Endpoint(p));
    j += jstep;
    t = ch[Wrap(j, len)];
    if (t >= n_) AugmentBlossom(t, Endpoint(p ^ 1));
    mate_[Endpoint(p)] = p ^ 1;
    mate_[Endpoint(p ^ 1)] = p;
  }
  std::rotate(ch.begin(), ch.begin() + i, ch.end());
  std::rotate(ep.begin(), ep.begin() + i, ep.end());
  blossombase_[b] = blossombase_[ch[0]];
  PMDECOMP_CHECK(blossombase_[b] == v, "blossom base mismatch");
}

void BlossomMatcher::AugmentMatching(int k) {
  const int ends[2][2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
  for (const auto& start : ends) {
    int s = start[0];
    int p = start[1];
    while (true) {
      const int bs = inblossom_[s];
      if (bs >= n_) AugmentBlossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) break;
      const int t = Endpoint(labelend_[bs]);
      const int bt = inblossom_[t];
      s = Endpoint(labelend_[bt]);
      const int j = Endpoint(labelend_[bt] ^ 1);
      if (bt >= n_) AugmentBlossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }
}

std::vector<int> BlossomMatcher::Solve() {
  const int nedge = static_cast<int>(edges_.size());
  if (nedge == 0) return std::vector<int>(n_, -1);
  const std::int64_t maxweight =
      std::max<std::int64_t>(0, *std::max_element(weight_.begin(), weight_.end()));
  neighbend_.assign(n_, {});
  for (int k = 0; k < nedge; ++k) {
    neighbend_[edges_[k].u].push_back(2 * k + 1);
    neighbend_[edges_[k].v].push_back(2 * k);
  }
  mate_.assign(n_, -1);
  label_.assign(2 * n_, 0);
  labelend_.assign(2 * n_, -1);
  inblossom_.resize(n_);
  std::iota(inblossom_.begin(), inblossom_.end(), 0);
  blossomparent_.assign(2 * n_, -1);
  childs_.assign(2 * n_, {});
  blossombase_.assign(2 * n_, -1);
  std::iota(blossombase_.begin(), blossombase_.begin() + n_, 0);
  endps_.assign(2 * n_, {});
  bestedge_.assign(2 * n_, -1);
  blossombestedges_.assign(2 * n_, {});
  has_bestedges_.assign(2 * n_, 0);
  unused_.clear();
  for (int b = n_; b < 2 * n_; ++b) unused_.push_back(b);
  dual_.assign(2 * n_, 0);
  std::fill(dual_.begin(), dual_.begin() + n_, maxweight);
  allowedge_.assign(nedge, 0);

  for (int stage = 0; stage < n_; ++stage) {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = n_; b < 2 * n_; ++b) {
      blossombestedges_[b].clear();
      has_bestedges_[b] = 0;
    }
    std::fill(allowedge_.begin(), allowedge_.end(), 0);
    queue_.clear();
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] == -1 && label_[inblossom_[v]] == 0) AssignLabel(v, 1, -1);
    }
    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        const int v = queue_.back();
        queue_.pop_back();
        for (int p : neighbend_[v]) {
          const int k = p / 2;
          const int w = Endpoint(p);
          if (inblossom_[v] == inblossom_[w]) continue;
          std::int64_t kslack = 0;
          if (!allowedge_[k]) {
            kslack = Slack(k);
            if (kslack <= 0) allowedge_[k] = 1;
          }
          if (allowedge_[k]) {
            if (label_[inblossom_[w]] == 0) {
              AssignLabel(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              const int base = ScanBlossom(v, w);
              if (base >= 0) {
                AddBlossom(base, k);
              } else {
                AugmentMatching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == 0) {
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == 1) {
            const int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < Slack(bestedge_[b])) {
              bestedge_[b] = k;
            }
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < Slack(bestedge_[w])) {
              bestedge_[w] = k;
            }
          }
        }
      }
      if (augmented) break;

      // Maximum-cardinality mode: no delta1 bound until nothing else applies.
      int deltatype = -1;
      std::int64_t delta = 0;
      int deltaedge = -1;
      int deltablossom = -1;
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          const std::int64_t d = Slack(bestedge_[v]);
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 2;
            deltaedge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * n_; ++b) {
        if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          const std::int64_t kslack = Slack(bestedge_[b]);
          PMDECOMP_CHECK(kslack % 2 == 0, "odd slack between S-blossoms");
          const std::int64_t d = kslack / 2;
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 3;
            deltaedge = bestedge_[b];
          }
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1 &&
            label_[b] == 2 && (deltatype == -1 || dual_[b] < delta)) {
          delta = dual_[b];
          deltatype = 4;
          deltablossom = b;
        }
      }
      if (deltatype == -1) {
        deltatype = 1;
        delta = std::max<std::int64_t>(
            0, *std::min_element(dual_.begin(), dual_.begin() + n_));
      }
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == 1) {
          dual_[v] -= delta;
        } else if (label_[inblossom_[v]] == 2) {
          dual_[v] += delta;
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
          if (label_[b] == 1) {
            dual_[b] += delta;
          } else if (label_[b] == 2) {
            dual_[b] -= delta;
          }
        }
      }
      if (deltatype == 1) {
        break;
      } else if (deltatype == 2) {
        allowedge_[deltaedge] = 1;
        int i = edges_[deltaedge].u;
        int j = edges_[deltaedge].v;
        if (label_[inblossom_[i]] == 0) std::swap(i, j);
        queue_.push_back(i);
      } else if (deltatype == 3) {
        allowedge_[deltaedge] = 1;
        queue_.push_back(edges_[deltaedge].u);
      } else {
        ExpandBlossom(deltablossom, false);
      }
    }
    if (!augmented) break;
    for (int b = n_; b < 2 * n_; ++b) {
      if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
          dual_[b] == 0) {
        ExpandBlossom(b, true);
      }
    }
  }
  std::vector<int> partner(n_, -1);
  for (int v = 0; v < n_; ++v) {
    if (mate_[v] >= 0) partner[v] = mate_[v];  // endpoint index
  }
  return partner;
}

}  // namespace

std::optional<PerfectMatching> MinWeightPerfectMatching(
    const Graph& g, std::span<const std::int64_t> weights) {
  const int n = g.num_vertices();
  if (n % 2 != 0) throw ArgumentError("perfect matching needs even n");
  if (static_cast<int>(weights.size()) != g.num_edges()) {
    throw ArgumentError("weight vector length does not match edge count");
  }
  std::int64_t top = 0;
  for (std::int64_t w : weights) {
    if (w < 0) throw ArgumentError("negative matching weight");
    top = std::max(top, w);
  }
  if (n == 0) return PerfectMatching{};
  std::vector<std::int64_t> flipped(weights.size());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    flipped[k] = top - weights[k];
  }
  BlossomMatcher matcher(n, std::vector<Edge>(g.edges().begin(), g.edges().end()),
                         std::move(flipped));
  const std::vector<int> mate_endpoint = matcher.Solve();
  PerfectMatching m;
  for (Vertex v = 0; v < n; ++v) {
    if (mate_endpoint[v] < 0) return std::nullopt;
    const EdgeId e = mate_endpoint[v] / 2;
    if (g.edge(e).u == v) m.edges.push_back(e);
  }
  std::sort(m.edges.begin(), m.edges.end());
  PMDECOMP_CHECK(IsPerfectMatching(g, m.edges),
                 "blossom returned a non-perfect matching");
  return m;
}

bool HasPerfectMatching(const Graph& g) {
  if (g.num_vertices() % 2 != 0) return false;
  const std::vector<std::int64_t> zero(g.num_edges(), 0);
  return MinWeightPerfectMatching(g, zero).has_value();
}

std::int64_t MatchingWeight(const PerfectMatching& m,
                            std::span<const std::int64_t> weights) {
  std::int64_t total = 0;
  for (EdgeId e : m.edges) total += weights[e];
  return total;
}

}  // namespace pmdecomp
