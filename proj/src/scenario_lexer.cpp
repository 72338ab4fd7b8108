#include <cctype>

#include "napgeo/scenario.hpp"

namespace napgeo::scenario {

ParseError::ParseError(std::string kind, int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + kind + " error: " + message),
      kind_(std::move(kind)),
      line_(line),
      column_(column) {}

EvalError::EvalError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string_view type_name(Type t) {
  switch (t) {
    case Type::kPoint: return "point";
    case Type::kLine: return "line";
    case Type::kCircle: return "circle";
    case Type::kScalar: return "scalar";
  }
  return "?";
}

namespace detail {

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::string text, int c) { out.push_back({kind, std::move(text), line, c}); };

  while (i < src.size()) {
    const char ch = src[i];
    if (ch == '\n') {
      push(Tok::kNewline, "\n", col);
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    const int start_col = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      push(Tok::kInt, std::string(src.substr(i, j - i)), start_col);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      push(Tok::kIdent, std::string(src.substr(i, j - i)), start_col);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    Tok kind;
    std::size_t width = 1;
    switch (ch) {
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '/': kind = Tok::kSlash; break;
      case '=':
        if (i + 1 < src.size() && src[i + 1] == '=') {
          kind = Tok::kEq;
          width = 2;
        } else {
          kind = Tok::kAssign;
        }
        break;
      default:
        throw ParseError("lexical", line, start_col,
                         "unexpected character '" + std::string(1, ch) + "'");
    }
    push(kind, std::string(src.substr(i, width)), start_col);
    i += width;
    col += static_cast<int>(width);
  }
  push(Tok::kEnd, "", col);
  return out;
}

}  // namespace detail

}  // namespace napgeo::scenario
