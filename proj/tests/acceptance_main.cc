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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pmdecomp/blossom.h"
#include "pmdecomp/decomposer.h"
#include "pmdecomp/laminar.h"
#include "pmdecomp/mincut.h"
#include "pmdecomp/oracle.h"
#include "testing/instances.h"

namespace pmdecomp {
namespace {

using testing::E;
using testing::Rng;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later failures only bump the count.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome Done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s), first: " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

std::string Seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

int g_failed = 0;

// `elapsed_s` overrides the measured time for results computed earlier.
void Report(int id, const std::string& name, double limit_s,
            const std::function<Outcome()>& body, double elapsed_s = -1) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (elapsed_s >= 0) secs = elapsed_s;
  if (limit_s > 0 && secs >= limit_s) {
    out.pass = false;
    out.detail += " (over the " + Seconds(limit_s) + " limit)";
  }
  if (!out.pass) ++g_failed;
  std::printf("[%s] %2d %s: %s [%s]\n", out.pass ? "PASS" : "FAIL", id,
              name.c_str(), out.detail.c_str(), Seconds(secs).c_str());
  std::fflush(stdout);
}

Outcome G1EndToEnd() {
  const FracMatching x = testing::G1();
  const Graph& g = x.graph();
  const DecompositionTrace t = Decompose(x);
  Checker c;
  c.Expect(IsOk(VerifyDecomposition(x, t.terms)), "does not verify");
  c.Expect(t.terms.terms.size() == 3, "term count " +
                                          std::to_string(t.terms.terms.size()));
  const std::vector<EdgeId> special = {E(g, 'a', 'b'), E(g, 'c', 'd'),
                                       E(g, 'e', 'f')};
  std::set<EdgeId> seen;
  for (const Term& term : t.terms.terms) {
    c.Expect(term.coeff == Rat(1, 3), "coefficient " + term.coeff.ToString());
    int hits = 0;
    for (EdgeId e : special) {
      if (std::binary_search(term.matching.edges.begin(),
                             term.matching.edges.end(), e)) {
        ++hits;
        seen.insert(e);
      }
    }
    c.Expect(hits == 1, "term holds " + std::to_string(hits) +
                            " of the edges ab, cd, ef");
  }
  c.Expect(seen.size() == 3, "edges ab, cd, ef not all distinct across terms");
  return c.Done("3 terms of 1/3, each with a distinct edge of {ab,cd,ef}");
}

Outcome PetersenEndToEnd() {
  const FracMatching x = testing::Petersen();
  const DecompositionTrace t = Decompose(x);
  Checker c;
  c.Expect(IsOk(VerifyDecomposition(x, t.terms)), "does not verify");
  c.Expect(t.terms.terms.size() == 6, "term count " +
                                          std::to_string(t.terms.terms.size()));
  std::set<PerfectMatching> distinct;
  for (const Term& term : t.terms.terms) {
    c.Expect(term.coeff == Rat(1, 6), "coefficient " + term.coeff.ToString());
    distinct.insert(term.matching);
  }
  c.Expect(distinct.size() == 6, "repeated matching");
  std::string summary = "6 terms of 1/6";
  if (t.phases.front().matching == testing::Spokes(x.graph())) {
    c.Expect(t.phases.front().type == PhaseType::kType2 &&
                 t.phases.front().coeff == Rat(1, 6),
             "spokes phase gamma " + t.phases.front().coeff.ToString());
    summary += "; first matching is the spokes, gamma = " +
               t.phases.front().coeff.ToString();
  }
  return c.Done(summary);
}

BigInt Pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

struct CorpusResult {
  Checker term_bound, gamma, structure, denominators;
  int instances = 0;
  int type2 = 0;
  int phases = 0;
  int refreshes = 0;
  double seconds = 0;
};

CorpusResult RunCorpus() {
  CorpusResult r;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(20260301);
  const int sizes[] = {6, 8, 10, 12};
  for (int i = 0; i < 200; ++i) {
    const int n = sizes[i % 4];
    const auto inst = testing::RandomConvexCombination(rng, n, 2, 10);
    const FracMatching& x = inst.x;
    const std::string tag = "instance " + std::to_string(i) + " (n=" +
                            std::to_string(n) + ")";
    DecomposeOptions opts;
    opts.observer = [&](const PhaseObservation& o) {
      const PhaseRecord& rec = o.record;
      const Graph& g = o.y_before.graph();
      const std::string ptag = tag + " phase " + std::to_string(rec.index);
      int weight = 0;
      for (EdgeId e : rec.matching.edges) weight += o.weights[e];
      r.structure.Expect(weight == o.family_before.size(),
                         ptag + ": matching weight != |L|");
      for (const OddSet& s : o.family_before.sets()) {
        r.structure.Expect(Crossings(s, rec.matching, g) == 1,
                           ptag + ": member crossed more than once");
        r.structure.Expect(CutCapacity(o.residual, s) == o.residual.alpha(),
                           ptag + ": member not tight after subtraction");
      }
      for (const Rat& d : DegreeSums(o.residual)) {
        r.structure.Expect(d == o.residual.alpha(),
                           ptag + ": residual degree sum != alpha - beta");
      }
      for (const Rat& d : DegreeSums(o.y_after)) {
        r.structure.Expect(d == o.y_after.alpha(),
                           ptag + ": degree sum != alpha after phase");
      }
      r.structure.Expect(o.family_after.size() <= n / 2 - 1,
                         ptag + ": |L| > n/2 - 1");
      if (rec.type == PhaseType::kType1) {
        bool vanished = false;
        for (EdgeId e : rec.matching.edges) {
          vanished |= o.y_before.value(e).sign() > 0 &&
                      o.y_after.value(e).is_zero();
        }
        r.structure.Expect(vanished, ptag + ": Type 1 removed no edge");
      } else {
        ++r.type2;
        r.structure.Expect(rec.coeff.sign() > 0, ptag + ": gamma <= 0");
        r.structure.Expect(rec.new_tight_cut.has_value() &&
                               o.family_after.size() > o.family_before.size(),
                           ptag + ": Type 2 did not grow L");
        const Rat bisect =
            FindGammaBisect(o.y_before.alpha(), o.y_before, rec.matching,
                            rec.beta);
        const auto brute =
            oracle::BruteGamma(o.y_before.alpha(), o.y_before, rec.matching);
        r.gamma.Expect(bisect == rec.coeff,
                       ptag + ": bisection " + bisect.ToString() + " vs " +
                           rec.coeff.ToString());
        r.gamma.Expect(brute.has_value() && *brute == rec.coeff,
                       ptag + ": brute force disagrees with " +
                           rec.coeff.ToString());
      }
      ++r.phases;
    };
    DecompositionTrace t;
    try {
      t = Decompose(x, opts);
    } catch (const std::exception& e) {
      r.term_bound.Expect(false, tag + ": " + e.what());
      continue;
    }
    ++r.instances;
    const int m = static_cast<int>(SupportEdges(x).size());
    r.term_bound.Expect(IsOk(VerifyDecomposition(x, t.terms)),
                        tag + ": does not verify");
    r.term_bound.Expect(static_cast<int>(t.terms.terms.size()) <= m,
                        tag + ": more than m terms");
    r.structure.Expect(t.stats.type2_phases <= n / 2 - 1,
                       tag + ": too many Type 2 phases");
    r.structure.Expect(t.stats.type1_phases <= m - n / 2 + 1,
                       tag + ": too many Type 1 phases");
    const BigInt ceiling =
        Pow(MaxDenominator(x), m) * Pow(BigInt(n), n / 2);
    r.denominators.Expect(t.stats.max_denominator <= ceiling,
                          tag + ": denominator " +
                              t.stats.max_denominator.get_str() +
                              " above d^m n^(n/2)");
    r.refreshes += t.stats.laminar_refreshes;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

Outcome OddCutOracle() {
  Rng rng(4);
  Checker c;
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + 2 * (i % 6);
    const FracMatching x = testing::RandomWeighted(rng, n, 0.5, 7);
    const OddCutResult fast = MinOddCut(x);
    const auto brute = oracle::BruteMinOddCut(x, 1);
    c.Expect(brute && fast.capacity == brute->capacity,
             "instance " + std::to_string(i) + ": " + fast.capacity.ToString() +
                 " vs brute force");
    c.Expect(fast.capacity == CutCapacity(x, fast.set),
             "instance " + std::to_string(i) + ": reported set capacity");
  }
  return c.Done("500 graphs, n <= 12, exact capacity match");
}

Outcome MatchingOracle() {
  Rng rng(5);
  Checker c;
  int feasible = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + 2 * (i % 6);
    const auto inst = testing::RandomIntegerWeighted(rng, n, 0.5, 6);
    const auto fast = MinWeightPerfectMatching(inst.g, inst.weights);
    const auto all = oracle::EnumeratePerfectMatchings(inst.g);
    const std::string tag = "instance " + std::to_string(i);
    c.Expect(fast.has_value() == !all.empty(), tag + ": feasibility differs");
    if (!fast || all.empty()) continue;
    ++feasible;
    std::int64_t best = MatchingWeight(all.front(), inst.weights);
    for (const auto& m : all) {
      best = std::min(best, MatchingWeight(m, inst.weights));
    }
    c.Expect(IsPerfectMatching(inst.g, fast->edges), tag + ": not perfect");
    c.Expect(MatchingWeight(*fast, inst.weights) == best,
             tag + ": weight " +
                 std::to_string(MatchingWeight(*fast, inst.weights)) +
                 " vs " + std::to_string(best));
  }
  return c.Done("500 graphs (" + std::to_string(feasible) +
                " with a perfect matching), weights in [0,6], exact");
}

Outcome NegativeControls() {
  Checker c;
  c.Expect(!HasPerfectMatching(testing::TwoTrianglesGraph()),
           "two triangles report a perfect matching");
  const FracMatching y = testing::PetersenMinusSpokes();
  const ValidationResult v = ValidateFractionalPM(y);
  const auto* viol = std::get_if<Violation>(&v);
  const auto* odd = viol ? std::get_if<OddCutViolation>(viol) : nullptr;
  using testing::V;
  const OddSet inner(10, {V('f'), V('g'), V('h'), V('i'), V('j')});
  c.Expect(odd != nullptr, "Petersen minus spokes passes validation");
  if (odd) {
    c.Expect(odd->set == inner, "certificate " + odd->set.ToString());
    c.Expect(odd->capacity.is_zero(), "certificate capacity " +
                                          odd->capacity.ToString());
  }
  return c.Done("two triangles: no perfect matching; Petersen minus spokes "
                "at 2/3: violated by {f,g,h,i,j} with capacity 0");
}

Outcome GomoryHuOracle() {
  Rng rng(10);
  Checker c;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 7;
    const CapacitatedGraph g = testing::RandomCapacitated(rng, n, 0.5, 9);
    const GomoryHuTree tree = BuildGomoryHuTree(g);
    const auto brute = oracle::BruteAllPairsMinCut(g);
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = s + 1; t < n; ++t) {
        c.Expect(tree.MinCutValue(s, t) == brute[s][t],
                 "graph " + std::to_string(i) + " pair " + std::to_string(s) +
                     "," + std::to_string(t));
      }
    }
  }
  return c.Done("200 graphs, n <= 8, all pairs exact");
}

Outcome MinWeightFace() {
  Rng rng(11);
  Checker c;
  for (int i = 0; i < 50; ++i) {
    const auto inst = testing::RandomMinWeightCombination(rng, 6 + 2 * (i % 3));
    const DecompositionTrace t = Decompose(inst.x);
    const std::string tag = "instance " + std::to_string(i);
    c.Expect(IsOk(VerifyDecomposition(inst.x, t.terms)),
             tag + ": does not verify");
    c.Expect(IsOk(VerifyMinWeightProperty(t.terms, inst.weights)),
             tag + ": unequal matching weights");
  }
  return c.Done("50 instances, every term has the minimum weight");
}

Outcome BipartiteBaseline() {
  Rng rng(12);
  Checker c;
  for (int i = 0; i < 100; ++i) {
    const FracMatching x =
        testing::RandomBipartite(rng, 2 + i % 5, 1 + (i / 5) % 6);
    const std::string tag = "instance " + std::to_string(i);
    c.Expect(IsOk(VerifyDecomposition(x, BvnBipartite(x))),
             tag + ": BvN does not verify");
    c.Expect(IsOk(VerifyDecomposition(x, Decompose(x).terms)),
             tag + ": decompose does not verify");
  }
  return c.Done("100 bipartite instances, both decompositions verify");
}

}  // namespace
}  // namespace pmdecomp

int main() {
  using namespace pmdecomp;
  CorpusResult corpus;
  bool corpus_ok = true;
  std::string corpus_error;
  try {
    corpus = RunCorpus();
  } catch (const std::exception& e) {
    corpus_ok = false;
    corpus_error = e.what();
  }
  auto from_corpus = [&](const Checker& ch, const std::string& summary) {
    return [&, summary] {
      if (!corpus_ok) return Outcome{false, "exception: " + corpus_error};
      return ch.Done(summary);
    };
  };
  const std::string size = std::to_string(corpus.instances) + " instances, " +
                           std::to_string(corpus.phases) + " phases";

  Report(1, "G1 end-to-end", 1.0, G1EndToEnd);
  Report(2, "Petersen end-to-end", 1.0, PetersenEndToEnd);
  Report(3, "term bound", 120.0,
         from_corpus(corpus.term_bound,
                     size + ", all verify with <= m terms"),
         corpus.seconds);
  Report(4, "min odd cut vs brute force", 120.0, OddCutOracle);
  Report(5, "min-weight matching vs enumeration", 120.0, MatchingOracle);
  Report(6, "gamma triple agreement", 0, [&] {
    Outcome o = from_corpus(corpus.gamma,
                            std::to_string(corpus.type2) +
                                " Type 2 phases, iterative = bisection = "
                                "brute force")();
    if (o.pass && corpus.type2 == 0) {
      o = {false, "corpus produced no Type 2 phase"};
    }
    return o;
  });
  Report(7, "structural invariants", 0,
         from_corpus(corpus.structure,
                     size + " checked (" + std::to_string(corpus.refreshes) +
                         " laminar refreshes)"));
  Report(8, "denominator ceiling", 0,
         from_corpus(corpus.denominators, "max denominator <= d^m n^(n/2)"));
  Report(9, "negative controls", 0, NegativeControls);
  Report(10, "Gomory-Hu flow equivalence", 60.0, GomoryHuOracle);
  Report(11, "min-weight face preserved", 0, MinWeightFace);
  Report(12, "bipartite baseline", 0, BipartiteBaseline);
  std::printf("%s: %d of 12 criteria failed\n", g_failed ? "FAILED" : "OK",
              g_failed);
  return g_failed ? 1 : 0;
}
