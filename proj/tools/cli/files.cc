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

#include "cli/files.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cli/json_positions.h"
#include "pmdecomp/errors.h"

namespace pmdecomp::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& Require(const PositionedJson& doc, const json& obj,
                    const std::string& pointer, const char* key) {
  if (!obj.contains(key)) doc.Fail(pointer, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

Rat ParseRational(const PositionedJson& doc, const json& v,
                  const std::string& pointer) {
  if (!v.is_string()) {
    doc.Fail(pointer, "rational values must be strings such as \"1/3\"");
  }
  try {
    return Rat::Parse(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    doc.Fail(pointer, "malformed rational \"" + v.get<std::string>() + "\"");
  } catch (const std::domain_error&) {
    doc.Fail(pointer, "malformed rational \"" + v.get<std::string>() + "\"");
  }
}

std::vector<std::string> ParseNames(const PositionedJson& doc, const json& obj,
                                    const std::string& base,
                                    std::optional<int> n) {
  std::vector<std::string> names;
  if (!obj.contains("vertex_names")) return names;
  const std::string pointer = base + "/vertex_names";
  const json& list = obj.at("vertex_names");
  if (!list.is_array()) doc.Fail(pointer, "vertex_names must be an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = pointer + "/" + std::to_string(i);
    if (!list[i].is_string()) doc.Fail(p, "vertex names must be strings");
    const std::string name = list[i].get<std::string>();
    if (name.empty()) doc.Fail(p, "empty vertex name");
    if (!seen.insert(name).second) doc.Fail(p, "duplicate vertex name " + name);
    names.push_back(name);
  }
  if (n && static_cast<int>(names.size()) != *n) {
    doc.Fail(pointer, "vertex_names has " + std::to_string(names.size()) +
                          " entries but n = " + std::to_string(*n));
  }
  return names;
}

Vertex ParseVertex(const PositionedJson& doc, const json& v,
                   const std::string& pointer, int n,
                   const std::vector<std::string>& names) {
  if (v.is_number_integer()) {
    const auto i = v.get<long long>();
    if (i < 0 || i >= n) {
      doc.Fail(pointer, "vertex index " + std::to_string(i) + " out of range");
    }
    return static_cast<Vertex>(i);
  }
  if (v.is_string()) {
    const auto it = std::find(names.begin(), names.end(), v.get<std::string>());
    if (it == names.end()) {
      doc.Fail(pointer, "unknown vertex name \"" + v.get<std::string>() + "\"");
    }
    return static_cast<Vertex>(it - names.begin());
  }
  doc.Fail(pointer, "vertex must be an index or a declared name");
}

int ParseCount(const PositionedJson& doc, const json& v,
               const std::string& pointer) {
  if (!v.is_number_integer() || v.get<long long>() < 0 ||
      v.get<long long>() > 1'000'000) {
    doc.Fail(pointer, "n must be a nonnegative integer");
  }
  return static_cast<int>(v.get<long long>());
}

bool HasObject(const ordered_json& j) {
  if (j.is_object()) return true;
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (HasObject(e)) return true;
  }
  return false;
}

std::string Inline(const ordered_json& j) {
  if (!j.is_array()) return j.dump();
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += Inline(j[i]);
  }
  return out + "]";
}

// Indented JSON with short object-free arrays kept on one line.
void Pretty(const ordered_json& j, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_array() && !j.empty()) {
    const std::string flat = Inline(j);
    if (!HasObject(j) && indent + flat.size() <= 78) {
      out += flat;
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      Pretty(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += inner + ordered_json(it.key()).dump() + ": ";
      Pretty(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else {
    out += j.dump();
  }
}

std::string Render(const ordered_json& j) {
  std::string out;
  Pretty(j, 0, out);
  return out + "\n";
}

ordered_json VertexJson(const std::vector<std::string>& names, Vertex v) {
  if (names.empty()) return v;
  return names[v];
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  const PositionedJson doc = PositionedJson::Parse(text);
  const json& root = doc.root();
  if (!root.is_object()) doc.Fail("", "instance must be a JSON object");
  const int n = ParseCount(doc, Require(doc, root, "", "n"), "/n");
  std::vector<std::string> names = ParseNames(doc, root, "", n);
  const json& edges = Require(doc, root, "", "edges");
  if (!edges.is_array()) doc.Fail("/edges", "edges must be an array");
  std::vector<Edge> list;
  std::vector<Rat> values;
  std::map<std::pair<Vertex, Vertex>, std::size_t> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string p = "/edges/" + std::to_string(i);
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 3) {
      doc.Fail(p, "each edge must be [u, v, \"value\"]");
    }
    const Vertex u = ParseVertex(doc, e[0], p + "/0", n, names);
    const Vertex v = ParseVertex(doc, e[1], p + "/1", n, names);
    if (u == v) doc.Fail(p, "self-loop at " + VertexLabel(names, u));
    const auto key = std::minmax(u, v);
    if (!seen.emplace(key, i).second) {
      doc.Fail(p, "duplicate edge " + VertexLabel(names, key.first) + "-" +
                      VertexLabel(names, key.second));
    }
    list.push_back({key.first, key.second});
    values.push_back(ParseRational(doc, e[2], p + "/2"));
  }
  Rat alpha(1);
  if (root.contains("alpha")) {
    alpha = ParseRational(doc, root.at("alpha"), "/alpha");
    if (alpha.sign() < 0 || alpha > Rat(1)) {
      doc.Fail("/alpha", "alpha must lie in [0, 1]");
    }
  }
  return Instance{FracMatching(Graph(n, std::move(list)), std::move(values),
                               alpha),
                  std::move(names)};
}

std::string SerializeInstance(const Instance& inst) {
  const Graph& g = inst.x.graph();
  ordered_json root;
  root["n"] = g.num_vertices();
  if (!inst.vertex_names.empty()) root["vertex_names"] = inst.vertex_names;
  root["alpha"] = inst.x.alpha().ToString();
  ordered_json edges = ordered_json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    edges.push_back({VertexJson(inst.vertex_names, g.edge(e).u),
                     VertexJson(inst.vertex_names, g.edge(e).v),
                     inst.x.value(e).ToString()});
  }
  root["edges"] = std::move(edges);
  return Render(root);
}

std::string InstanceHash(const Instance& inst) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : SerializeInstance(inst)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string VertexLabel(const std::vector<std::string>& names, Vertex v) {
  return names.empty() ? std::to_string(v) : names[v];
}

std::string SetLabel(const std::vector<std::string>& names,
                     std::span<const Vertex> members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += VertexLabel(names, members[i]);
  }
  return out + "}";
}

std::string MatchingLabel(const std::vector<std::string>& names,
                          const Graph& g, const PerfectMatching& m) {
  std::string out;
  for (EdgeId e : m.edges) {
    if (!out.empty()) out += " ";
    out += VertexLabel(names, g.edge(e).u) + "-" +
           VertexLabel(names, g.edge(e).v);
  }
  return out;
}

DecompositionDoc ParseDecomposition(
    std::string_view text, const std::vector<std::string>& fallback_names) {
  const PositionedJson doc = PositionedJson::Parse(text);
  const json& root = doc.root();
  if (!root.is_object()) doc.Fail("", "decomposition must be a JSON object");
  DecompositionDoc out;
  if (root.contains("n")) out.n = ParseCount(doc, root.at("n"), "/n");
  out.vertex_names = ParseNames(doc, root, "", out.n);
  const std::vector<std::string>& names =
      out.vertex_names.empty() ? fallback_names : out.vertex_names;
  int n = out.n.value_or(0);
  if (!out.n) {
    n = names.empty() ? 1'000'000 : static_cast<int>(names.size());
  }
  const json& terms = Require(doc, root, "", "terms");
  if (!terms.is_array()) doc.Fail("/terms", "terms must be an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = "/terms/" + std::to_string(i);
    const json& t = terms[i];
    if (!t.is_object()) doc.Fail(p, "each term must be an object");
    RawTerm term;
    term.coeff = ParseRational(doc, Require(doc, t, p, "coeff"), p + "/coeff");
    const json& m = Require(doc, t, p, "matching");
    if (!m.is_array()) doc.Fail(p + "/matching", "matching must be an array");
    for (std::size_t j = 0; j < m.size(); ++j) {
      const std::string q = p + "/matching/" + std::to_string(j);
      if (!m[j].is_array() || m[j].size() != 2) {
        doc.Fail(q, "each matching edge must be [u, v]");
      }
      const Vertex u = ParseVertex(doc, m[j][0], q + "/0", n, names);
      const Vertex v = ParseVertex(doc, m[j][1], q + "/1", n, names);
      term.pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    out.terms.push_back(std::move(term));
  }
  if (root.contains("provenance")) {
    out.provenance = ordered_json::parse(root.at("provenance").dump());
  }
  if (out.vertex_names.empty()) out.vertex_names = fallback_names;
  return out;
}

std::string SerializeDecomposition(const Instance& inst,
                                   const Decomposition& d,
                                   const nlohmann::ordered_json& provenance) {
  const Graph& g = inst.x.graph();
  ordered_json root;
  root["n"] = g.num_vertices();
  if (!inst.vertex_names.empty()) root["vertex_names"] = inst.vertex_names;
  ordered_json terms = ordered_json::array();
  for (const Term& t : d.terms) {
    ordered_json pairs = ordered_json::array();
    for (EdgeId e : t.matching.edges) {
      pairs.push_back({VertexJson(inst.vertex_names, g.edge(e).u),
                       VertexJson(inst.vertex_names, g.edge(e).v)});
    }
    ordered_json term;
    term["coeff"] = t.coeff.ToString();
    term["matching"] = std::move(pairs);
    terms.push_back(std::move(term));
  }
  root["terms"] = std::move(terms);
  if (!provenance.is_null()) root["provenance"] = provenance;
  return Render(root);
}

std::optional<std::string> ResolveTerms(const DecompositionDoc& doc,
                                        const Graph& g, Decomposition* out) {
  out->terms.clear();
  for (std::size_t i = 0; i < doc.terms.size(); ++i) {
    PerfectMatching m;
    for (const auto& [u, v] : doc.terms[i].pairs) {
      const auto e = (u < g.num_vertices() && v < g.num_vertices())
                         ? g.FindEdge(u, v)
                         : std::nullopt;
      if (!e) {
        return "term " + std::to_string(i) + " uses " +
               VertexLabel(doc.vertex_names, u) + "-" +
               VertexLabel(doc.vertex_names, v) +
               ", which is not an edge of the instance";
      }
      m.edges.push_back(*e);
    }
    std::sort(m.edges.begin(), m.edges.end());
    out->terms.push_back(Term{doc.terms[i].coeff, std::move(m)});
  }
  return std::nullopt;
}

Graph GraphOfTerms(const DecompositionDoc& doc) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  int n = doc.n.value_or(static_cast<int>(doc.vertex_names.size()));
  for (const RawTerm& t : doc.terms) {
    for (const auto& p : t.pairs) {
      pairs.insert(p);
      n = std::max(n, p.second + 1);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw FileError("cannot write " + path);
}

}  // namespace pmdecomp::cli
