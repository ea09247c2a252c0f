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

// Decomposition of a fractional perfect matching of a general graph into a
// convex combination of at most m perfect matchings (m = support size).
//
// Each phase weights support edges by how many laminar tight cuts they
// cross, takes a minimum-weight perfect matching M, and subtracts it with
// the largest coefficient that keeps the residual a scaled fractional
// perfect matching. When the full bottleneck value would violate an odd
// cut, the coefficient is lowered to the most stringent odd cut's value and
// that cut becomes tight, growing the laminar family.

#ifndef PMDECOMP_DECOMPOSER_H_
#define PMDECOMP_DECOMPOSER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pmdecomp/fractional.h"
#include "pmdecomp/laminar.h"
#include "pmdecomp/mincut.h"

namespace pmdecomp {

enum class PhaseType {
  kType1,  // the bottleneck coefficient was accepted; an edge left the support
  kType2,  // the coefficient was lowered; a new tight odd cut appeared
};

struct PhaseRecord {
  int index = 0;
  PhaseType type = PhaseType::kType1;
  PerfectMatching matching;
  Rat coeff;
  Rat beta;  // bottleneck value min_{e in M} y_e
  Rat alpha_before;
  Rat alpha_after;
  std::optional<OddSet> new_tight_cut;  // Type 2 only
  int laminar_size = 0;                 // |L| when the matching was chosen
  int gamma_iterations = 0;
};

struct DecompositionStats {
  CutStats cuts;
  // Largest common denominator of (y, alpha) over all phases.
  BigInt max_denominator = 1;
  int type1_phases = 0;
  int type2_phases = 0;
  // Times the laminar family had to be regrown before a phase because a
  // tight cut outside it was crossed more than once.
  int laminar_refreshes = 0;
};

struct DecompositionTrace {
  Decomposition terms;
  std::vector<PhaseRecord> phases;
  DecompositionStats stats;
};

// Snapshot handed to DecomposeOptions::observer once per completed phase.
struct PhaseObservation {
  const PhaseRecord& record;
  const FracMatching& y_before;
  const LaminarFamily& family_before;
  std::span<const int> weights;  // indexed by y_before.graph() edge id
  const FracMatching& residual;  // y_before - beta * M
  const OddCutResult& residual_min_cut;
  const FracMatching& y_after;
  const LaminarFamily& family_after;
};

struct DecomposeOptions {
  // Recompute every Type 2 coefficient by bisection and require agreement.
  bool cross_check_bisection = false;
  std::function<void(const PhaseObservation&)> observer;
};

// Throws ArgumentError if alpha != 1, InfeasibleInputError (message carries
// the violation certificate) if x is not a fractional perfect matching, and
// InvariantError if an internal invariant fails.
DecompositionTrace Decompose(const FracMatching& x,
                             const DecomposeOptions& options = {});

struct GammaResult {
  Rat gamma;
  OddSet witness;  // tight at alpha - gamma after subtracting gamma * M
  int iterations = 0;
};

// Iterative search for the largest b such that y - b*M is an
// (alpha - b)-fractional perfect matching, starting from the violated odd
// set S of y - beta*M. Throws ArgumentError when alpha differs from
// y.alpha() or S is crossed fewer than twice by M, and InvariantError when
// the iteration cap (10 * support size) is exceeded.
GammaResult FindGamma(const Rat& alpha, const FracMatching& y,
                      const PerfectMatching& m, const Rat& beta,
                      const OddSet& s, CutStats* stats = nullptr);

// Same value by bisection on b with a minimum-odd-cut feasibility test,
// finished by recovering the unique rational of bounded denominator inside
// the final bracket.
Rat FindGammaBisect(const Rat& alpha, const FracMatching& y,
                    const PerfectMatching& m, const Rat& beta,
                    CutStats* stats = nullptr);

// Greedy Birkhoff-von Neumann decomposition for bipartite supports. Throws
// ArgumentError for non-bipartite supports or unequal degree sums, and
// InfeasibleInputError when a nonzero residual has no perfect matching.
Decomposition BvnBipartite(const FracMatching& x);

enum class VerifyFailureReason {
  kNonPositiveCoefficient,
  kNotPerfectMatching,
  kOutsideSupport,
  kSumMismatch,
  kComponentMismatch,
  kWeightMismatch,
};

struct VerifyOk {};
struct VerifyFailure {
  VerifyFailureReason reason;
  std::string message;
};
using VerifyResult = std::variant<VerifyOk, VerifyFailure>;

inline bool IsOk(const VerifyResult& r) {
  return std::holds_alternative<VerifyOk>(r);
}

// Exact check that d is a decomposition of x: positive coefficients summing
// to alpha, perfect matchings inside the support, componentwise equality.
VerifyResult VerifyDecomposition(const FracMatching& x, const Decomposition& d);

// Every matching in d has the same w-weight.
VerifyResult VerifyMinWeightProperty(const Decomposition& d,
                                     std::span<const Rat> weights);

// Draws terms with probability coeff / total using exact integer thresholds
// over a seeded std::mt19937_64; the byte stream is reproducible across
// platforms.
class MatchingSampler {
 public:
  // Throws ArgumentError for an empty decomposition or a non-positive total.
  MatchingSampler(const Decomposition& d, std::uint64_t seed);

  const PerfectMatching& Draw();
  int DrawIndex();

 private:
  std::vector<PerfectMatching> matchings_;
  BigInt denominator_;
  std::vector<BigInt> cumulative_;
  std::mt19937_64 engine_;
};

PerfectMatching SampleMatching(const Decomposition& d, std::uint64_t seed);

}  // namespace pmdecomp

#endif  // PMDECOMP_DECOMPOSER_H_
