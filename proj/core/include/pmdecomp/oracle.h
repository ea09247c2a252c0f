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

// Exhaustive reference implementations for small instances. Each one is
// exponential and refuses inputs above its limit with SizeLimitError.

#ifndef PMDECOMP_ORACLE_H_
#define PMDECOMP_ORACLE_H_

#include <optional>
#include <vector>

#include "pmdecomp/fractional.h"
#include "pmdecomp/mincut.h"

namespace pmdecomp::oracle {

struct OracleLimits {
  int max_n_enumeration = 14;
  int max_n_subsets = 12;
};

// All perfect matchings, each with sorted edge ids, in lexicographic order.
std::vector<PerfectMatching> EnumeratePerfectMatchings(
    const Graph& g, const OracleLimits& limits = {});

// Minimum over odd S with |S| >= min_size and |V - S| >= min_size. Same
// normalization and tie-break as MinOddCut. nullopt when no such S exists.
// Throws ArgumentError if n is odd.
std::optional<OddCutResult> BruteMinOddCut(const FracMatching& x,
                                           int min_size,
                                           const OracleLimits& limits = {});

// Exact feasibility of sum a_i M_i = x, a_i >= 0, sum a_i = alpha over the
// perfect matchings of the support, by phase-one simplex with Bland's rule.
// The returned decomposition is a basic solution. nullopt iff infeasible.
std::optional<Decomposition> BruteDecompose(const FracMatching& x,
                                            const OracleLimits& limits = {});

// min over odd S with |delta(S) ∩ M| > 1 of
// (y(delta(S)) - alpha) / (|delta(S) ∩ M| - 1); nullopt if no such S.
std::optional<Rat> BruteGamma(const Rat& alpha, const FracMatching& y,
                              const PerfectMatching& m,
                              const OracleLimits& limits = {});

// result[s][t] is the s-t minimum cut; the diagonal is zero.
std::vector<std::vector<Rat>> BruteAllPairsMinCut(
    const CapacitatedGraph& g, const OracleLimits& limits = {});

// Every odd S with 3 <= |S| <= n - 3 and capacity exactly x.alpha(), both
// sides of each cut included, sorted.
std::vector<OddSet> BruteTightOddCuts(const FracMatching& x,
                                      const OracleLimits& limits = {});

}  // namespace pmdecomp::oracle

#endif  // PMDECOMP_ORACLE_H_
