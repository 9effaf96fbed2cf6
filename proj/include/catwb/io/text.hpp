#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "catwb/core/errors.hpp"

namespace catwb::io {

/// Input that does not parse; line and column are 1-based (0 = whole file).
class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message)
      : PreconditionError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_, column_;
  std::string message_;
};

struct Token {
  std::string text;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

/// Splits on whitespace after dropping `#` comments; blank lines are skipped.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

/// Names must survive tokenization unchanged.
inline bool is_plain_name(std::string_view s) {
  if (s.empty() || s == "->" || s == "=" || s == "." || s.back() == ':') return false;
  for (char ch : s)
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '#') return false;
  return true;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace catwb::io
