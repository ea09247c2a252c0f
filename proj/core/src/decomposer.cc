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

#include "pmdecomp/decomposer.h"

#include <algorithm>
#include <string>

#include "pmdecomp/blossom.h"
#include "pmdecomp/errors.h"

namespace pmdecomp {
namespace {

// Minimum-weight perfect matching of the support of y under `weights`
// (indexed by y.graph() edge id), returned in y.graph() edge ids.
std::optional<PerfectMatching> SupportMatching(const FracMatching& y,
                                               std::span<const int> weights) {
  const std::vector<EdgeId> support = SupportEdges(y);
  std::vector<Edge> edges;
  std::vector<std::int64_t> w;
  edges.reserve(support.size());
  for (EdgeId e : support) {
    edges.push_back(y.graph().edge(e));
    w.push_back(weights.empty() ? 0 : weights[e]);
  }
  const Graph sg(y.num_vertices(), std::move(edges));
  auto pm = MinWeightPerfectMatching(sg, w);
  if (!pm) return std::nullopt;
  PerfectMatching out;
  for (EdgeId e : pm->edges) out.edges.push_back(support[e]);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Rat Bottleneck(const FracMatching& y, const PerfectMatching& m) {
  PMDECOMP_CHECK(!m.edges.empty(), "empty matching");
  Rat beta = y.value(m.edges.front());
  for (EdgeId e : m.edges) beta = std::min(beta, y.value(e));
  return beta;
}

// y - b*M is an (alpha - b)-fractional perfect matching. Degree sums hold
// automatically, so only odd cuts need checking.
bool FeasibleAt(const FracMatching& y, const PerfectMatching& m, const Rat& b,
                CutStats* stats) {
  const FracMatching z = SubtractMatching(y, m, b);
  return MinOddCut(z, stats).capacity >= z.alpha();
}

void TrackDenominator(const FracMatching& y, DecompositionStats& stats) {
  const BigInt d = CommonDenominator(y);
  if (d > stats.max_denominator) stats.max_denominator = d;
}

std::string EdgeString(const Graph& g, EdgeId e) {
  return "(" + std::to_string(g.edge(e).u) + "," +
         std::to_string(g.edge(e).v) + ")";
}

}  // namespace

DecompositionTrace Decompose(const FracMatching& x,
                             const DecomposeOptions& options) {
  if (x.alpha() != Rat(1)) {
    throw ArgumentError("Decompose: alpha must be 1, got " +
                        x.alpha().ToString());
  }
  DecompositionTrace trace;
  DecompositionStats& stats = trace.stats;
  const ValidationResult valid = ValidateFractionalPM(x, &stats.cuts);
  if (!IsValid(valid)) {
    throw InfeasibleInputError(DescribeViolation(std::get<Violation>(valid)));
  }
  const int n = x.num_vertices();
  const int m = static_cast<int>(SupportEdges(x).size());
  const Graph& g = x.graph();

  LaminarFamily family = BuildMaximalLaminar(x, &stats.cuts);
  FracMatching y = x;
  TrackDenominator(y, stats);

  while (!y.IsZero()) {
    PMDECOMP_CHECK(y.alpha().sign() > 0, "positive residual with alpha 0");
    const std::vector<int> weights = EdgeWeights(family, g);
    auto pm = SupportMatching(y, weights);
    PMDECOMP_CHECK(pm.has_value(), "support has no perfect matching");
    const PerfectMatching& match = *pm;
    int total_weight = 0;
    for (EdgeId e : match.edges) total_weight += weights[e];
    PMDECOMP_CHECK(total_weight == family.size(),
                   "matching weight " + std::to_string(total_weight) +
                       " differs from |L| = " + std::to_string(family.size()));
    for (const OddSet& s : family.sets()) {
      PMDECOMP_CHECK(Crossings(s, match, g) == 1,
                     "member " + s.ToString() + " crossed more than once");
    }

    const Rat beta = Bottleneck(y, match);
    PMDECOMP_CHECK(beta.sign() > 0, "zero bottleneck coefficient");
    const FracMatching residual = SubtractMatching(y, match, beta);
    const OddCutResult cut = MinOddCut(residual, &stats.cuts);

    PhaseRecord rec;
    rec.index = static_cast<int>(trace.phases.size());
    rec.matching = match;
    rec.beta = beta;
    rec.alpha_before = y.alpha();
    rec.laminar_size = family.size();

    std::optional<FracMatching> y_after;
    std::optional<LaminarFamily> family_after;
    if (cut.capacity >= residual.alpha()) {
      rec.type = PhaseType::kType1;
      rec.coeff = beta;
      y_after = residual;
      family_after = family;
      family_after->set_alpha(residual.alpha());
      ++stats.type1_phases;
    } else {
      GammaResult gr =
          FindGamma(y.alpha(), y, match, beta, cut.set, &stats.cuts);
      if (gr.gamma.is_zero()) {
        // A tight cut outside L is crossed more than once: grow L and redo.
        LaminarFamily grown = UpdateLaminar(family, y, &stats.cuts);
        PMDECOMP_CHECK(grown.size() > family.size(),
                       "tight cut " + gr.witness.ToString() +
                           " crossed repeatedly but L did not grow");
        family = std::move(grown);
        ++stats.laminar_refreshes;
        continue;
      }
      PMDECOMP_CHECK(gr.gamma < beta, "gamma not below beta");
      if (options.cross_check_bisection) {
        const Rat bis = FindGammaBisect(y.alpha(), y, match, beta, &stats.cuts);
        PMDECOMP_CHECK(bis == gr.gamma, "bisection gives " + bis.ToString() +
                                            ", iteration gives " +
                                            gr.gamma.ToString());
      }
      rec.type = PhaseType::kType2;
      rec.coeff = gr.gamma;
      rec.gamma_iterations = gr.iterations;
      y_after = SubtractMatching(y, match, gr.gamma);
      PMDECOMP_CHECK(CutCapacity(*y_after, gr.witness) == y_after->alpha(),
                     "witness " + gr.witness.ToString() + " not tight");
      family_after = UpdateLaminar(family, *y_after, &stats.cuts);
      PMDECOMP_CHECK(family_after->size() > family.size(),
                     "Type 2 phase did not grow the laminar family");
      rec.new_tight_cut = family_after->Contains(gr.witness)
                              ? gr.witness
                              : family_after->set(family.size());
      ++stats.type2_phases;
    }
    rec.alpha_after = y_after->alpha();

    if (options.observer) {
      options.observer(PhaseObservation{rec, y, family, weights, residual, cut,
                                        *y_after, *family_after});
    }
    trace.terms.terms.push_back(Term{rec.coeff, match});
    trace.phases.push_back(std::move(rec));
    y = std::move(*y_after);
    family = std::move(*family_after);
    TrackDenominator(y, stats);
    PMDECOMP_CHECK(static_cast<int>(trace.terms.terms.size()) <= m,
                   "more than m terms");
  }
  PMDECOMP_CHECK(y.alpha().is_zero(), "zero residual with alpha " +
                                          y.alpha().ToString());
  PMDECOMP_CHECK(stats.type2_phases <= std::max(0, n / 2 - 1),
                 "more than n/2 - 1 Type 2 phases");
  const VerifyResult check = VerifyDecomposition(x, trace.terms);
  PMDECOMP_CHECK(IsOk(check), std::get<VerifyFailure>(check).message);
  return trace;
}

GammaResult FindGamma(const Rat& alpha, const FracMatching& y,
                      const PerfectMatching& m, const Rat& beta,
                      const OddSet& s, CutStats* stats) {
  if (alpha != y.alpha()) {
    throw ArgumentError("FindGamma: alpha differs from y.alpha()");
  }
  const Graph& g = y.graph();
  const int cap = 10 * std::max<int>(1, SupportEdges(y).size());
  OddSet t = s;
  GammaResult out;
  Rat previous = beta;
  for (int it = 1;; ++it) {
    PMDECOMP_CHECK(it <= cap, "iteration cap exceeded");
    const int k = Crossings(t, m, g);
    if (k < 2) {
      throw ArgumentError("FindGamma: " + t.ToString() + " crossed " +
                          std::to_string(k) + " time(s)");
    }
    const Rat gamma = (CutCapacity(y, t) - alpha) / Rat(k - 1);
    PMDECOMP_CHECK(gamma < previous, "gamma did not decrease");
    PMDECOMP_CHECK(gamma.sign() >= 0, "negative gamma");
    previous = gamma;
    const FracMatching z = SubtractMatching(y, m, gamma);
    const OddCutResult cut = MinOddCut(z, stats);
    if (cut.capacity >= z.alpha()) {
      out.gamma = gamma;
      out.witness = std::move(t);
      out.iterations = it;
      return out;
    }
    t = cut.set;
  }
}

Rat FindGammaBisect(const Rat& alpha, const FracMatching& y,
                    const PerfectMatching& m, const Rat& beta,
                    CutStats* stats) {
  if (alpha != y.alpha()) {
    throw ArgumentError("FindGammaBisect: alpha differs from y.alpha()");
  }
  if (FeasibleAt(y, m, beta, stats)) return beta;
  const BigInt d = CommonDenominator(y) * y.num_vertices();
  const Rat width(BigInt(1), 2 * d * d);
  Rat lo(0);
  Rat hi = beta;
  while (hi - lo >= width) {
    const Rat mid = (lo + hi) / Rat(2);
    if (FeasibleAt(y, m, mid, stats)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const Rat gamma = SimplestBetween(lo, hi);
  PMDECOMP_CHECK(gamma.denominator() <= d,
                 "recovered " + gamma.ToString() + " exceeds the bound");
  PMDECOMP_CHECK(gamma < hi && FeasibleAt(y, m, gamma, stats),
                 "recovered " + gamma.ToString() + " is infeasible");
  return gamma;
}

Decomposition BvnBipartite(const FracMatching& x) {
  const std::vector<EdgeId> support = SupportEdges(x);
  if (!x.graph().IsBipartite(support)) {
    throw ArgumentError("BvnBipartite: support is not bipartite");
  }
  for (const Rat& v : x.values()) {
    if (v.sign() < 0) throw ArgumentError("BvnBipartite: negative value");
  }
  for (const Rat& s : DegreeSums(x)) {
    if (s != x.alpha()) {
      throw ArgumentError("BvnBipartite: degree sum " + s.ToString() +
                          " differs from alpha " + x.alpha().ToString());
    }
  }
  Decomposition d;
  FracMatching y = x;
  while (!y.IsZero()) {
    auto pm = SupportMatching(y, {});
    if (!pm) {
      throw InfeasibleInputError(
          "BvnBipartite: residual support has no perfect matching");
    }
    const Rat beta = Bottleneck(y, *pm);
    y = SubtractMatching(y, *pm, beta);
    d.terms.push_back(Term{beta, std::move(*pm)});
  }
  return d;
}

VerifyResult VerifyDecomposition(const FracMatching& x,
                                 const Decomposition& d) {
  const Graph& g = x.graph();
  std::vector<Rat> sum(g.num_edges());
  Rat total;
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    const Term& t = d.terms[i];
    const std::string tag = "term " + std::to_string(i);
    if (t.coeff.sign() <= 0) {
      return VerifyFailure{VerifyFailureReason::kNonPositiveCoefficient,
                           tag + " has coefficient " + t.coeff.ToString()};
    }
    for (EdgeId e : t.matching.edges) {
      if (e < 0 || e >= g.num_edges()) {
        return VerifyFailure{VerifyFailureReason::kNotPerfectMatching,
                             tag + " uses unknown edge id " +
                                 std::to_string(e)};
      }
    }
    if (!IsPerfectMatching(g, t.matching.edges)) {
      return VerifyFailure{VerifyFailureReason::kNotPerfectMatching,
                           tag + " is not a perfect matching"};
    }
    for (EdgeId e : t.matching.edges) {
      if (x.value(e).sign() <= 0) {
        return VerifyFailure{VerifyFailureReason::kOutsideSupport,
                             tag + " uses edge " + EdgeString(g, e) +
                                 " outside the support"};
      }
      sum[e] += t.coeff;
    }
    total += t.coeff;
  }
  if (total != x.alpha()) {
    return VerifyFailure{VerifyFailureReason::kSumMismatch,
                         "coefficients sum to " + total.ToString() +
                             ", expected " + x.alpha().ToString()};
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (sum[e] != x.value(e)) {
      return VerifyFailure{VerifyFailureReason::kComponentMismatch,
                           "edge " + EdgeString(g, e) + " sums to " +
                               sum[e].ToString() + ", expected " +
                               x.value(e).ToString()};
    }
  }
  return VerifyOk{};
}

VerifyResult VerifyMinWeightProperty(const Decomposition& d,
                                     std::span<const Rat> weights) {
  std::optional<Rat> first;
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    Rat w;
    for (EdgeId e : d.terms[i].matching.edges) {
      if (e < 0 || e >= static_cast<int>(weights.size())) {
        return VerifyFailure{VerifyFailureReason::kWeightMismatch,
                             "term " + std::to_string(i) +
                                 " uses an edge without a weight"};
      }
      w += weights[e];
    }
    if (!first) {
      first = w;
    } else if (w != *first) {
      return VerifyFailure{VerifyFailureReason::kWeightMismatch,
                           "term " + std::to_string(i) + " weighs " +
                               w.ToString() + ", term 0 weighs " +
                               first->ToString()};
    }
  }
  return VerifyOk{};
}

MatchingSampler::MatchingSampler(const Decomposition& d, std::uint64_t seed)
    : engine_(seed) {
  if (d.terms.empty()) {
    throw ArgumentError("MatchingSampler: empty decomposition");
  }
  const Rat total = d.TotalCoefficient();
  std::vector<Rat> probs;
  for (const Term& t : d.terms) {
    if (t.coeff.sign() <= 0) {
      throw ArgumentError("MatchingSampler: non-positive coefficient");
    }
    probs.push_back(t.coeff / total);
    matchings_.push_back(t.matching);
  }
  denominator_ = CommonDenominator(probs);
  BigInt acc = 0;
  for (const Rat& p : probs) {
    acc += p.numerator() * (denominator_ / p.denominator());
    cumulative_.push_back(acc);
  }
}

int MatchingSampler::DrawIndex() {
  // Uniform r in [0, denominator_) by rejection on whole 64-bit words.
  const std::size_t bits = mpz_sizeinbase(denominator_.get_mpz_t(), 2);
  BigInt r;
  do {
    r = 0;
    for (std::size_t have = 0; have < bits; have += 64) {
      const std::uint64_t word = engine_();
      BigInt w = static_cast<unsigned long>(word >> 32);
      w <<= 32;
      w += static_cast<unsigned long>(word & 0xffffffffULL);
      r <<= 64;
      r += w;
    }
    const std::size_t excess = (bits + 63) / 64 * 64 - bits;
    r >>= excess;
  } while (r >= denominator_);
  const auto it =
      std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
  return static_cast<int>(it - cumulative_.begin());
}

const PerfectMatching& MatchingSampler::Draw() {
  return matchings_[DrawIndex()];
}

PerfectMatching SampleMatching(const Decomposition& d, std::uint64_t seed) {
  MatchingSampler s(d, seed);
  return s.Draw();
}

}  // namespace pmdecomp
