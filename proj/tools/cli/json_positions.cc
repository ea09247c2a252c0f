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

#include "cli/json_positions.h"

#include <cctype>
#include <iterator>
#include <vector>

namespace pmdecomp::cli {
namespace {

using nlohmann::json;

// Forward iterator over the input that publishes how far the lexer has read.
struct TrackingIterator {
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  const char** cursor = nullptr;

  reference operator*() const { return *p; }
  TrackingIterator& operator++() {
    ++p;
    *cursor = p;
    return *this;
  }
  TrackingIterator operator++(int) {
    TrackingIterator old = *this;
    ++*this;
    return old;
  }
  bool operator==(const TrackingIterator& o) const { return p == o.p; }
  bool operator!=(const TrackingIterator& o) const { return p != o.p; }
};

std::string Escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

// Builds the DOM and records where each value begins. The cursor sits just
// past the last character the lexer consumed, which is the end of a string
// or container token and one past the end of a number or literal.
class Builder : public nlohmann::json_sax<json> {
 public:
  Builder(std::string_view text, const char* const* cursor,
          std::map<std::string, SourcePosition>& positions)
      : text_(text), cursor_(cursor), positions_(positions) {}

  json result;

  bool null() override { return Scalar(nullptr, ScalarStart()); }
  bool boolean(bool v) override { return Scalar(v, ScalarStart()); }
  bool number_integer(number_integer_t v) override {
    return Scalar(v, ScalarStart());
  }
  bool number_unsigned(number_unsigned_t v) override {
    return Scalar(v, ScalarStart());
  }
  bool number_float(number_float_t v, const string_t&) override {
    return Scalar(v, ScalarStart());
  }
  bool string(string_t& v) override { return Scalar(v, StringStart()); }
  bool binary(binary_t& v) override {
    return Scalar(json::binary(v), ScalarStart());
  }
  bool start_object(std::size_t) override {
    return Open(json::object(), Offset() - 1);
  }
  bool key(string_t& k) override {
    frames_.back().key = k;
    return true;
  }
  bool end_object() override { return Close(); }
  bool start_array(std::size_t) override {
    return Open(json::array(), Offset() - 1);
  }
  bool end_array() override { return Close(); }
  bool parse_error(std::size_t, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    std::string msg = ex.what();
    const auto colon = msg.find("syntax error");
    if (colon != std::string::npos) msg = msg.substr(colon);
    throw ParseError(msg, PositionAt(text_, Offset() == 0 ? 0 : Offset() - 1));
  }

 private:
  struct Frame {
    json value;
    std::string pointer;
    std::string key;
  };

  std::size_t Offset() const {
    return static_cast<std::size_t>(*cursor_ - text_.data());
  }
  std::size_t StringStart() const {
    // Walk back from the closing quote to the unescaped opening quote.
    std::size_t i = Offset() - 1;
    while (i > 0) {
      --i;
      if (text_[i] != '"') continue;
      std::size_t slashes = 0;
      while (i > slashes && text_[i - 1 - slashes] == '\\') ++slashes;
      if (slashes % 2 == 0) return i;
    }
    return 0;
  }
  std::size_t ScalarStart() const {
    std::size_t i = Offset();
    if (i > 0) --i;
    while (i > 0 && (std::isalnum(static_cast<unsigned char>(text_[i - 1])) ||
                     text_[i - 1] == '-' || text_[i - 1] == '+' ||
                     text_[i - 1] == '.')) {
      --i;
    }
    return i;
  }
  std::string ChildPointer() const {
    if (frames_.empty()) return "";
    const Frame& f = frames_.back();
    if (f.value.is_array()) {
      return f.pointer + "/" + std::to_string(f.value.size());
    }
    return f.pointer + "/" + Escape(f.key);
  }
  void Attach(json v) {
    if (frames_.empty()) {
      result = std::move(v);
    } else if (frames_.back().value.is_array()) {
      frames_.back().value.push_back(std::move(v));
    } else {
      frames_.back().value[frames_.back().key] = std::move(v);
    }
  }
  bool Scalar(json v, std::size_t start) {
    positions_[ChildPointer()] = PositionAt(text_, start);
    Attach(std::move(v));
    return true;
  }
  bool Open(json v, std::size_t start) {
    std::string pointer = ChildPointer();
    positions_[pointer] = PositionAt(text_, start);
    frames_.push_back({std::move(v), std::move(pointer), {}});
    return true;
  }
  bool Close() {
    json v = std::move(frames_.back().value);
    frames_.pop_back();
    Attach(std::move(v));
    return true;
  }

  std::string_view text_;
  const char* const* cursor_;
  std::map<std::string, SourcePosition>& positions_;
  std::vector<Frame> frames_;
};

}  // namespace

std::string ParseError::Describe() const {
  return "line " + std::to_string(pos_.line) + ", column " +
         std::to_string(pos_.column) + ": " + what();
}

SourcePosition PositionAt(std::string_view text, std::size_t offset) {
  SourcePosition pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

PositionedJson PositionedJson::Parse(std::string_view text) {
  PositionedJson out;
  const char* cursor = text.data();
  Builder builder(text, &cursor, out.positions_);
  TrackingIterator first{text.data(), &cursor};
  TrackingIterator last{text.data() + text.size(), &cursor};
  json::sax_parse(first, last, &builder);
  out.root_ = std::move(builder.result);
  return out;
}

SourcePosition PositionedJson::PositionOf(const std::string& pointer) const {
  std::string p = pointer;
  for (;;) {
    const auto it = positions_.find(p);
    if (it != positions_.end()) return it->second;
    if (p.empty()) return {};
    p.erase(p.rfind('/'));
  }
}

void PositionedJson::Fail(const std::string& pointer,
                          const std::string& message) const {
  throw ParseError(message, PositionOf(pointer));
}

}  // namespace pmdecomp::cli
