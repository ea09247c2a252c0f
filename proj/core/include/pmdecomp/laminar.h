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

#ifndef PMDECOMP_LAMINAR_H_
#define PMDECOMP_LAMINAR_H_

#include <span>
#include <vector>

#include "pmdecomp/fractional.h"
#include "pmdecomp/mincut.h"

namespace pmdecomp {

// Laminar family of tight odd alpha-cuts (each with at least three
// members) and its containment tree, rooted at the full vertex set.
// Tree nodes are member indices; kRoot stands for V.
class LaminarFamily {
 public:
  static constexpr int kRoot = -1;

  LaminarFamily(int num_vertices, Rat alpha)
      : num_vertices_(num_vertices), alpha_(std::move(alpha)) {}

  int num_vertices() const { return num_vertices_; }
  const Rat& alpha() const { return alpha_; }
  void set_alpha(Rat alpha) { alpha_ = std::move(alpha); }

  int size() const { return static_cast<int>(sets_.size()); }
  bool empty() const { return sets_.empty(); }
  std::span<const OddSet> sets() const { return sets_; }
  const OddSet& set(int i) const { return sets_[i]; }
  int parent(int i) const { return parent_[i]; }
  // Children of `node` in insertion order.
  std::vector<int> ChildrenOf(int node) const;
  // Members in parent-before-child order, siblings in insertion order.
  std::vector<int> TopDownOrder() const;

  bool IsLaminarWith(const OddSet& s) const;
  bool Contains(const OddSet& s) const;

  // Adds `s` under its smallest strict superset and re-parents the members
  // it contains. Returns the new member index. Throws InvariantError if `s`
  // is already present, has fewer than three members, or crosses a member.
  int Insert(OddSet s);

 private:
  int num_vertices_;
  Rat alpha_;
  std::vector<OddSet> sets_;
  std::vector<int> parent_;
};

// Maximal laminar family of tight odd alpha-cuts of x, grown by the
// contraction tree walk. Throws ArgumentError if x is not a valid
// alpha-fractional perfect matching.
LaminarFamily BuildMaximalLaminar(const FracMatching& x,
                                  CutStats* stats = nullptr);

// Grows `family` to a maximal laminar family at x's alpha. Throws
// InvariantError if an existing member is not tight under x.
LaminarFamily UpdateLaminar(const LaminarFamily& family, const FracMatching& x,
                            CutStats* stats = nullptr);

// w(e) = number of members whose cut contains e.
std::vector<int> EdgeWeights(const LaminarFamily& family, const Graph& g);

// |delta(S) ∩ M|.
int Crossings(const OddSet& s, const PerfectMatching& m, const Graph& g);

// Laminarity, tree consistency, the n/2 - 1 size bound, and (when x is
// given) tightness of every member at x's alpha. Throws InvariantError.
void CheckLaminarInvariants(const LaminarFamily& family,
                            const FracMatching* x = nullptr);

}  // namespace pmdecomp

#endif  // PMDECOMP_LAMINAR_H_
