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

#ifndef PMDECOMP_BLOSSOM_H_
#define PMDECOMP_BLOSSOM_H_

#include <cstdint>
#include <optional>
#include <span>

#include "pmdecomp/fractional.h"
#include "pmdecomp/graph.h"

namespace pmdecomp {

// Minimum-weight perfect matching on a general graph with nonnegative
// integer edge weights, via Edmonds' weighted blossom algorithm with
// integral (doubled) dual variables. O(n^3). Returns nullopt when the graph
// has no perfect matching. Ties are broken deterministically by the
// algorithm's fixed scan order over vertex and edge ids.
//
// Throws ArgumentError if n is odd, a weight is negative, or the weight
// vector length differs from the edge count.
std::optional<PerfectMatching> MinWeightPerfectMatching(
    const Graph& g, std::span<const std::int64_t> weights);

bool HasPerfectMatching(const Graph& g);

std::int64_t MatchingWeight(const PerfectMatching& m,
                            std::span<const std::int64_t> weights);

}  // namespace pmdecomp

#endif  // PMDECOMP_BLOSSOM_H_
