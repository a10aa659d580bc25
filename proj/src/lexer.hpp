#pragma once

// Shared tokenizer for the word, surface and diagram grammars.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qo/error.hpp"

namespace qo::detail {

enum class TokenKind { punct, label, glue, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  /// With `brackets`, `[` and `]` are punctuation (diagram grammar).
  explicit Lexer(std::string_view input, bool brackets = false);

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == TokenKind::end; }

  bool accept(char punct);
  void expect(char punct);
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& token, const std::string& message) const;

 private:
  std::string_view input_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

ParseError parse_error_at(std::string_view input, std::size_t offset,
                          const std::string& message);

}  // namespace qo::detail
