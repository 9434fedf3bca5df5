// Copyright 2026 The qsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsim/cli/toml_lite.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qsim/core/types.hpp"

namespace qsim::cli {

namespace {

using nlohmann::json;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  json document() {
    json root = json::object();
    json* table = &root;
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        ++pos_;
        if (!eof() && peek() == '[') fail("arrays of tables are not supported");
        skip_ws();
        const std::vector<std::string> path = key_path();
        skip_ws();
        expect(']');
        table = &open_table(root, path);
      } else {
        const std::vector<std::string> path = key_path();
        skip_ws();
        expect('=');
        skip_ws();
        assign(*table, path, value());
      }
      end_of_line();
    }
    return root;
  }

  json single_value() {
    skip_ws();
    json v = value();
    skip_ws();
    if (!eof()) fail("trailing characters after value");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) line += s_[i] == '\n' ? 1 : 0;
    throw ValidationError("toml line " + std::to_string(line) + ": " + what);
  }

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  void expect(char c) {
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  void skip_comment() {
    if (!eof() && peek() == '#')
      while (!eof() && peek() != '\n') ++pos_;
  }

  void skip_blank_lines() {
    while (!eof()) {
      skip_ws();
      skip_comment();
      if (eof()) return;
      if (peek() == '\n') {
        ++pos_;
      } else if (peek() == '\r' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '\n') {
        pos_ += 2;
      } else {
        return;
      }
    }
  }

  // Whitespace, comments and newlines inside arrays.
  void skip_array_space() {
    while (!eof()) {
      skip_ws();
      skip_comment();
      if (!eof() && (peek() == '\n' || peek() == '\r')) {
        ++pos_;
        continue;
      }
      return;
    }
  }

  void end_of_line() {
    skip_ws();
    skip_comment();
    if (eof()) return;
    if (peek() == '\r') ++pos_;
    if (eof() || peek() != '\n') fail("expected end of line");
    ++pos_;
  }

  static bool bare_key_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '-';
  }

  std::string key_part() {
    if (eof()) fail("expected key");
    if (peek() == '"') return basic_string();
    if (peek() == '\'') return literal_string();
    const std::size_t start = pos_;
    while (!eof() && bare_key_char(peek())) ++pos_;
    if (pos_ == start) fail("expected key");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::vector<std::string> key_path() {
    std::vector<std::string> path{key_part()};
    while (true) {
      skip_ws();
      if (eof() || peek() != '.') break;
      ++pos_;
      skip_ws();
      path.push_back(key_part());
    }
    return path;
  }

  json& open_table(json& root, const std::vector<std::string>& path) {
    json* t = &root;
    for (const auto& k : path) {
      if (!t->contains(k)) (*t)[k] = json::object();
      t = &(*t)[k];
      if (!t->is_object()) fail("key '" + k + "' is not a table");
    }
    return *t;
  }

  void assign(json& table, const std::vector<std::string>& path, json v) {
    json* t = &table;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!t->contains(path[i])) (*t)[path[i]] = json::object();
      t = &(*t)[path[i]];
      if (!t->is_object()) fail("key '" + path[i] + "' is not a table");
    }
    if (t->contains(path.back())) fail("duplicate key '" + path.back() + "'");
    (*t)[path.back()] = std::move(v);
  }

  json value() {
    if (eof()) fail("expected value");
    const char c = peek();
    if (c == '"') return basic_string();
    if (c == '\'') return literal_string();
    if (c == '[') return array();
    if (c == '{') return inline_table();
    if (s_.substr(pos_, 4) == "true") {
      pos_ += 4;
      return true;
    }
    if (s_.substr(pos_, 5) == "false") {
      pos_ += 5;
      return false;
    }
    return number();
  }

  std::string basic_string() {
    expect('"');
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      const char c = s_[pos_++];
      if (c == '"') return out;
      if (c != '\\') {
        out += c;
        continue;
      }
      if (eof()) fail("unterminated escape");
      const char e = s_[pos_++];
      switch (e) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'u': out += unicode(4); break;
        case 'U': out += unicode(8); break;
        default: fail(std::string("invalid escape \\") + e);
      }
    }
  }

  std::string unicode(std::size_t digits) {
    if (pos_ + digits > s_.size()) fail("truncated unicode escape");
    unsigned long cp = 0;
    const auto res = std::from_chars(s_.data() + pos_, s_.data() + pos_ + digits, cp, 16);
    if (res.ptr != s_.data() + pos_ + digits) fail("invalid unicode escape");
    pos_ += digits;
    std::string out;
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x110000) {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      fail("unicode code point out of range");
    }
    return out;
  }

  std::string literal_string() {
    expect('\'');
    const std::size_t start = pos_;
    while (!eof() && peek() != '\'' && peek() != '\n') ++pos_;
    if (eof() || peek() != '\'') fail("unterminated string");
    std::string out(s_.substr(start, pos_ - start));
    ++pos_;
    return out;
  }

  json array() {
    expect('[');
    json arr = json::array();
    while (true) {
      skip_array_space();
      if (eof()) fail("unterminated array");
      if (peek() == ']') {
        ++pos_;
        return arr;
      }
      arr.push_back(value());
      skip_array_space();
      if (!eof() && peek() == ',') {
        ++pos_;
        continue;
      }
      skip_array_space();
      expect(']');
      return arr;
    }
  }

  json inline_table() {
    expect('{');
    json t = json::object();
    skip_ws();
    if (!eof() && peek() == '}') {
      ++pos_;
      return t;
    }
    while (true) {
      skip_ws();
      const std::vector<std::string> path = key_path();
      skip_ws();
      expect('=');
      skip_ws();
      assign(t, path, value());
      skip_ws();
      if (!eof() && peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return t;
    }
  }

  json number() {
    const std::size_t start = pos_;
    while (!eof() && std::string_view("+-0123456789._eExXoObBabcdefABCDEFinf").find(peek()) !=
                         std::string_view::npos)
      ++pos_;
    std::string tok(s_.substr(start, pos_ - start));
    if (tok.empty()) fail("expected value");
    std::string digits;
    for (std::size_t i = 0; i < tok.size(); ++i) {
      if (tok[i] != '_') {
        digits += tok[i];
        continue;
      }
      const bool ok = i > 0 && i + 1 < tok.size() && std::isxdigit(static_cast<unsigned char>(tok[i - 1])) &&
                      std::isxdigit(static_cast<unsigned char>(tok[i + 1]));
      if (!ok) fail("misplaced underscore in number '" + tok + "'");
    }
    std::string body = digits;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
      negative = body[0] == '-';
      body.erase(0, 1);
    }
    if (body == "inf") return negative ? -std::numeric_limits<double>::infinity()
                                       : std::numeric_limits<double>::infinity();
    if (body == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'o' || body[1] == 'b')) {
      if (negative || digits[0] == '+') fail("prefixed integers cannot carry a sign");
      const int base = body[1] == 'x' ? 16 : body[1] == 'o' ? 8 : 2;
      long long v = 0;
      const auto res = std::from_chars(body.data() + 2, body.data() + body.size(), v, base);
      if (res.ec != std::errc() || res.ptr != body.data() + body.size()) fail("invalid integer '" + tok + "'");
      return v;
    }
    const bool is_float = body.find_first_of(".eE") != std::string::npos;
    if (body.empty() || !std::isdigit(static_cast<unsigned char>(body[0])))
      fail("invalid value '" + tok + "'");
    if (body.size() > 1 && body[0] == '0' && std::isdigit(static_cast<unsigned char>(body[1])))
      fail("leading zeros in number '" + tok + "'");
    if (is_float) {
      double v = 0.0;
      const auto res = std::from_chars(digits.data() + (digits[0] == '+' ? 1 : 0),
                                       digits.data() + digits.size(), v);
      if (res.ec != std::errc() || res.ptr != digits.data() + digits.size())
        fail("invalid float '" + tok + "'");
      const std::size_t dot = body.find('.');
      if (dot != std::string::npos &&
          (dot + 1 >= body.size() || !std::isdigit(static_cast<unsigned char>(body[dot + 1]))))
        fail("invalid float '" + tok + "'");
      return v;
    }
    long long v = 0;
    const auto res = std::from_chars(digits.data() + (digits[0] == '+' ? 1 : 0),
                                     digits.data() + digits.size(), v);
    if (res.ec != std::errc() || res.ptr != digits.data() + digits.size())
      fail("invalid integer '" + tok + "'");
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

nlohmann::json parse_toml(std::string_view text) { return Parser(text).document(); }

nlohmann::json parse_toml_value(std::string_view text) {
  try {
    return Parser(text).single_value();
  } catch (const ValidationError&) {
    return std::string(text);
  }
}

}  // namespace qsim::cli
