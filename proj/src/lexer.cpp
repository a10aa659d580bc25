#include "lexer.hpp"

#include <cctype>

#include "qo/core_words.hpp"

namespace qo::detail {

ParseError parse_error_at(std::string_view input, std::size_t offset,
                          const std::string& message) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < input.size(); ++i) {
    if (input[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return ParseError(message, line, column);
}

Lexer::Lexer(std::string_view input, bool brackets) : input_(input) {
  auto is_punct = [brackets](char c) {
    return c == '(' || c == ')' || c == '{' || c == '}' || c == '^' ||
           c == ';' || c == ',' || (brackets && (c == '[' || c == ']'));
  };
  std::size_t i = 0;
  while (i < input.size()) {
    const char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_punct(c)) {
      tokens_.push_back({TokenKind::punct, std::string(1, c), i});
      ++i;
      continue;
    }
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
      const std::string_view digits = input.substr(i + 1, j - i - 1);
      const bool ends_cleanly =
          j == input.size() || std::isspace(static_cast<unsigned char>(input[j])) ||
          is_punct(input[j]);
      if (digits.empty() || digits[0] == '0' || !ends_cleanly) {
        throw parse_error_at(input, i, "malformed glue token; expected #k with k >= 1");
      }
      tokens_.push_back({TokenKind::glue, std::string(input.substr(i, j - i)), i});
      i = j;
      continue;
    }
    std::size_t j = i;
    while (j < input.size() && !std::isspace(static_cast<unsigned char>(input[j])) &&
           !is_punct(input[j])) {
      if (input[j] == '#') {
        throw parse_error_at(input, j, "reserved character '#' inside a label");
      }
      ++j;
    }
    tokens_.push_back({TokenKind::label, std::string(input.substr(i, j - i)), i});
    i = j;
  }
  tokens_.push_back({TokenKind::end, "", input.size()});
}

bool Lexer::accept(char punct) {
  const Token& t = peek();
  if (t.kind == TokenKind::punct && t.text[0] == punct) {
    ++pos_;
    return true;
  }
  return false;
}

void Lexer::expect(char punct) {
  if (!accept(punct)) {
    const Token& t = peek();
    fail_at(t, std::string("expected '") + punct + "' but found " +
                   (t.kind == TokenKind::end ? std::string("end of input")
                                             : "'" + t.text + "'"));
  }
}

void Lexer::fail(const std::string& message) const { fail_at(peek(), message); }

void Lexer::fail_at(const Token& token, const std::string& message) const {
  throw parse_error_at(input_, token.offset, message);
}

}  // namespace qo::detail
