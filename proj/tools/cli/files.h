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

// Instance and decomposition files. Both are JSON with every rational
// written as a string ("p" or "p/q"), so values never pass through floating
// point.
//
// Instance:
//   {"n": 6, "vertex_names": ["a", ...], "alpha": "1",
//    "edges": [["a", "b", "1/3"], ...]}
// Edge endpoints are indices or declared names; vertex_names and alpha are
// optional.
//
// Decomposition:
//   {"n": 6, "vertex_names": [...],
//    "terms": [{"coeff": "1/3", "matching": [["a", "b"], ...]}, ...],
//    "provenance": {...}}

#ifndef PMDECOMP_TOOLS_CLI_FILES_H_
#define PMDECOMP_TOOLS_CLI_FILES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pmdecomp/fractional.h"

namespace pmdecomp::cli {

struct Instance {
  FracMatching x;
  std::vector<std::string> vertex_names;  // empty when unnamed
};

// Throws ParseError.
Instance ParseInstance(std::string_view text);
// Canonical form: edges as (min, max) endpoints in input order, reduced
// rationals, names when present, alpha always written.
std::string SerializeInstance(const Instance& inst);

// FNV-1a 64-bit over the canonical serialization, as "fnv1a64:<hex>".
std::string InstanceHash(const Instance& inst);

std::string VertexLabel(const std::vector<std::string>& names, Vertex v);
std::string SetLabel(const std::vector<std::string>& names,
                     std::span<const Vertex> members);
std::string MatchingLabel(const std::vector<std::string>& names,
                          const Graph& g, const PerfectMatching& m);

struct RawTerm {
  Rat coeff;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

struct DecompositionDoc {
  std::optional<int> n;
  std::vector<std::string> vertex_names;
  std::vector<RawTerm> terms;
  nlohmann::ordered_json provenance;
};

// Vertex names in the file resolve against its own vertex_names, falling
// back to `fallback_names`. Throws ParseError.
DecompositionDoc ParseDecomposition(
    std::string_view text, const std::vector<std::string>& fallback_names = {});

std::string SerializeDecomposition(const Instance& inst,
                                   const Decomposition& d,
                                   const nlohmann::ordered_json& provenance);

// Edge ids for every pair; returns an error message when a pair is not an
// edge of g.
std::optional<std::string> ResolveTerms(const DecompositionDoc& doc,
                                        const Graph& g, Decomposition* out);

// Graph spanned by every pair in the document, for standalone use.
Graph GraphOfTerms(const DecompositionDoc& doc);

// Unreadable file or unwritable output.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws FileError.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace pmdecomp::cli

#endif  // PMDECOMP_TOOLS_CLI_FILES_H_
