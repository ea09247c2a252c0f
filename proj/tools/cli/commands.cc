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

#include "cli/commands.h"

#include <functional>
#include <ostream>
#include <type_traits>
#include <variant>

#include "cli/files.h"
#include "cli/json_positions.h"
#include "pmdecomp/decomposer.h"
#include "pmdecomp/errors.h"
#include "pmdecomp/mincut.h"
#include "pmdecomp/oracle.h"

#ifndef PMDECOMP_VERSION
#define PMDECOMP_VERSION "0.0.0"
#endif

namespace pmdecomp::cli {

const char kToolVersion[] = PMDECOMP_VERSION;

namespace {

using nlohmann::ordered_json;

// Maps library and file exceptions onto the exit-code contract.
int Guard(const std::string& path, std::ostream& err,
          const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << path << ":" << e.position().line << ":" << e.position().column
        << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InfeasibleInputError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

Instance LoadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path));
}

std::string DescribeViolation(const Instance& inst, const Violation& v) {
  const auto& names = inst.vertex_names;
  const Graph& g = inst.x.graph();
  const std::string alpha = inst.x.alpha().ToString();
  return std::visit(
      [&](const auto& item) -> std::string {
        using T = std::decay_t<decltype(item)>;
        if constexpr (std::is_same_v<T, NegativeEdgeViolation>) {
          return "edge " + VertexLabel(names, g.edge(item.edge).u) + "-" +
                 VertexLabel(names, g.edge(item.edge).v) +
                 " has negative value " + item.value.ToString();
        } else if constexpr (std::is_same_v<T, DegreeViolation>) {
          return "vertex " + VertexLabel(names, item.vertex) +
                 " has degree sum " + item.degree_sum.ToString() +
                 " != alpha " + alpha;
        } else if constexpr (std::is_same_v<T, OddCutViolation>) {
          return "odd set " + SetLabel(names, item.set.members()) +
                 " has cut capacity " + item.capacity.ToString() +
                 " < alpha " + alpha;
        } else {
          return "odd vertex count " + std::to_string(item.num_vertices);
        }
      },
      v);
}

std::string PhaseLine(const Instance& inst, const PhaseRecord& p) {
  std::string line = "phase " + std::to_string(p.index) + ": type " +
                     (p.type == PhaseType::kType1 ? "1" : "2") + ", coeff " +
                     p.coeff.ToString() + " (beta " + p.beta.ToString() +
                     "), alpha " + p.alpha_before.ToString() + " -> " +
                     p.alpha_after.ToString() + ", |L| " +
                     std::to_string(p.laminar_size) + ", matching " +
                     MatchingLabel(inst.vertex_names, inst.x.graph(),
                                   p.matching);
  if (p.new_tight_cut) {
    line += ", new tight cut " +
            SetLabel(inst.vertex_names, p.new_tight_cut->members());
  }
  return line;
}

ordered_json PhaseJson(const Instance& inst, const PhaseRecord& p) {
  ordered_json j;
  j["index"] = p.index;
  j["type"] = p.type == PhaseType::kType1 ? 1 : 2;
  j["coeff"] = p.coeff.ToString();
  j["beta"] = p.beta.ToString();
  j["alpha_before"] = p.alpha_before.ToString();
  j["alpha_after"] = p.alpha_after.ToString();
  j["laminar_size"] = p.laminar_size;
  if (p.new_tight_cut) {
    j["new_tight_cut"] =
        SetLabel(inst.vertex_names, p.new_tight_cut->members());
  }
  return j;
}

void Emit(const std::string& output, const std::string& doc,
          std::ostream& out) {
  if (output.empty()) {
    out << doc;
  } else {
    WriteFile(output, doc);
  }
}

}  // namespace

int RunValidate(const std::string& path, std::ostream& out,
                std::ostream& err) {
  return Guard(path, err, [&] {
    const Instance inst = LoadInstance(path);
    const ValidationResult r = ValidateFractionalPM(inst.x);
    if (IsValid(r)) {
      out << "ok: " << inst.x.alpha().ToString()
          << "-fractional perfect matching\n";
      return kExitOk;
    }
    out << "violation: " << DescribeViolation(inst, std::get<Violation>(r))
        << "\n";
    return kExitInfeasible;
  });
}

int RunDecompose(const std::string& path, const DecomposeFlags& flags,
                 std::ostream& out, std::ostream& err) {
  return Guard(path, err, [&] {
    const Instance inst = LoadInstance(path);
    std::ostream& report = flags.output.empty() ? err : out;
    const ValidationResult valid = ValidateFractionalPM(inst.x);
    if (flags.oracle_check) {
      const oracle::OracleLimits limits;
      if (inst.x.num_vertices() > limits.max_n_enumeration) {
        report << "oracle check skipped: n > " << limits.max_n_enumeration
               << "\n";
      } else {
        const bool brute = oracle::BruteDecompose(inst.x).has_value();
        if (brute != IsValid(valid)) {
          err << "internal error: oracle feasibility ("
              << (brute ? "feasible" : "infeasible")
              << ") disagrees with validation\n";
          return static_cast<int>(kExitInternalError);
        }
        report << "oracle check: "
               << (brute ? "feasible" : "infeasible") << ", agrees\n";
      }
    }
    if (!IsValid(valid)) {
      err << "infeasible: "
          << DescribeViolation(inst, std::get<Violation>(valid)) << "\n";
      return static_cast<int>(kExitInfeasible);
    }
    const DecompositionTrace t = Decompose(inst.x);
    if (flags.trace) {
      for (const PhaseRecord& p : t.phases) report << PhaseLine(inst, p) << "\n";
    }
    ordered_json prov;
    prov["tool_version"] = kToolVersion;
    prov["input_hash"] = InstanceHash(inst);
    ordered_json summary;
    summary["terms"] = t.terms.terms.size();
    summary["type1_phases"] = t.stats.type1_phases;
    summary["type2_phases"] = t.stats.type2_phases;
    summary["laminar_refreshes"] = t.stats.laminar_refreshes;
    summary["max_flow_calls"] = t.stats.cuts.max_flow_calls;
    summary["odd_cut_calls"] = t.stats.cuts.odd_cut_calls;
    summary["max_denominator"] = t.stats.max_denominator.get_str();
    prov["phase_summary"] = std::move(summary);
    if (flags.trace) {
      ordered_json phases = ordered_json::array();
      for (const PhaseRecord& p : t.phases) {
        phases.push_back(PhaseJson(inst, p));
      }
      prov["phases"] = std::move(phases);
    }
    Emit(flags.output, SerializeDecomposition(inst, t.terms, prov), out);
    if (!flags.output.empty()) {
      out << t.terms.terms.size() << " terms written to " << flags.output
          << "\n";
    }
    return static_cast<int>(kExitOk);
  });
}

int RunVerify(const std::string& instance_path,
              const std::string& decomposition_path, std::ostream& out,
              std::ostream& err) {
  return Guard(instance_path, err, [&] {
    const Instance inst = LoadInstance(instance_path);
    return Guard(decomposition_path, err, [&] {
      const DecompositionDoc doc = ParseDecomposition(
          ReadFile(decomposition_path), inst.vertex_names);
      if (doc.n && *doc.n != inst.x.num_vertices()) {
        out << "fail: decomposition has n = " << *doc.n
            << ", instance has n = " << inst.x.num_vertices() << "\n";
        return static_cast<int>(kExitInfeasible);
      }
      Decomposition d;
      if (auto problem = ResolveTerms(doc, inst.x.graph(), &d)) {
        out << "fail: " << *problem << "\n";
        return static_cast<int>(kExitInfeasible);
      }
      const VerifyResult r = VerifyDecomposition(inst.x, d);
      if (IsOk(r)) {
        out << "ok: " << d.terms.size() << " terms reproduce the instance\n";
        return static_cast<int>(kExitOk);
      }
      out << "fail: " << std::get<VerifyFailure>(r).message << "\n";
      return static_cast<int>(kExitInfeasible);
    });
  });
}

int RunMinOddCut(const std::string& path, int min_size, std::ostream& out,
                 std::ostream& err) {
  return Guard(path, err, [&] {
    if (min_size != 1 && min_size != 3) {
      throw ArgumentError("--min-size must be 1 or 3");
    }
    const Instance inst = LoadInstance(path);
    std::optional<OddCutResult> cut;
    if (min_size == 1) {
      cut = MinOddCut(inst.x);
    } else {
      cut = oracle::BruteMinOddCut(inst.x, 3);
    }
    if (!cut) {
      out << "no odd set with at least 3 vertices on each side\n";
      return static_cast<int>(kExitOk);
    }
    out << "set: " << SetLabel(inst.vertex_names, cut->set.members()) << "\n"
        << "capacity: " << cut->capacity.ToString() << "\n";
    return static_cast<int>(kExitOk);
  });
}

int RunSample(const std::string& decomposition_path, std::uint64_t seed,
              int count, std::ostream& out, std::ostream& err) {
  return Guard(decomposition_path, err, [&] {
    if (count < 1) throw ArgumentError("--count must be at least 1");
    const DecompositionDoc doc =
        ParseDecomposition(ReadFile(decomposition_path));
    const Graph g = GraphOfTerms(doc);
    Decomposition d;
    if (auto problem = ResolveTerms(doc, g, &d)) {
      throw InvariantError(*problem);
    }
    MatchingSampler sampler(d, seed);
    for (int i = 0; i < count; ++i) {
      out << MatchingLabel(doc.vertex_names, g, sampler.Draw()) << "\n";
    }
    return static_cast<int>(kExitOk);
  });
}

int RunOracleMatchings(const std::string& path, std::ostream& out,
                       std::ostream& err) {
  return Guard(path, err, [&] {
    const Instance inst = LoadInstance(path);
    const auto all = oracle::EnumeratePerfectMatchings(inst.x.graph());
    out << all.size() << " perfect matchings\n";
    for (const auto& m : all) {
      out << MatchingLabel(inst.vertex_names, inst.x.graph(), m) << "\n";
    }
    return static_cast<int>(kExitOk);
  });
}

int RunOracleDecompose(const std::string& path, const std::string& output,
                       std::ostream& out, std::ostream& err) {
  return Guard(path, err, [&] {
    const Instance inst = LoadInstance(path);
    const auto d = oracle::BruteDecompose(inst.x);
    if (!d) {
      err << "infeasible: no convex combination of perfect matchings\n";
      return static_cast<int>(kExitInfeasible);
    }
    ordered_json prov;
    prov["tool_version"] = kToolVersion;
    prov["input_hash"] = InstanceHash(inst);
    prov["method"] = "oracle";
    Emit(output, SerializeDecomposition(inst, *d, prov), out);
    return static_cast<int>(kExitOk);
  });
}

}  // namespace pmdecomp::cli
