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

#ifndef PMDECOMP_TOOLS_CLI_JSON_POSITIONS_H_
#define PMDECOMP_TOOLS_CLI_JSON_POSITIONS_H_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace pmdecomp::cli {

struct SourcePosition {
  int line = 1;
  int column = 1;
};

// Malformed or semantically invalid input file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, SourcePosition pos)
      : std::runtime_error(what), pos_(pos) {}
  SourcePosition position() const { return pos_; }
  // "line L, column C: message"
  std::string Describe() const;

 private:
  SourcePosition pos_;
};

// A parsed JSON document that remembers where each value starts, keyed by
// JSON pointer ("" for the root, "/edges/3/2" for nested values).
class PositionedJson {
 public:
  // Throws ParseError with the position of the first syntax error.
  static PositionedJson Parse(std::string_view text);

  const nlohmann::json& root() const { return root_; }
  SourcePosition PositionOf(const std::string& pointer) const;
  [[noreturn]] void Fail(const std::string& pointer,
                         const std::string& message) const;

 private:
  nlohmann::json root_;
  std::map<std::string, SourcePosition> positions_;
};

SourcePosition PositionAt(std::string_view text, std::size_t offset);

}  // namespace pmdecomp::cli

#endif  // PMDECOMP_TOOLS_CLI_JSON_POSITIONS_H_
