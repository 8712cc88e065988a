#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "negset/error.hpp"

namespace negset::session {

/// Error carrying a 1-based source position; code is ParseError or ValidationError.
class SessionError : public Error {
 public:
  SessionError(ErrorCode code, int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  /// Message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

enum class TokenKind {
  word,
  lbrace,
  rbrace,
  lbracket,
  rbracket,
  lparen,
  rparen,
  comma,
  equals,
  greater,
  newline,
  end,
};

std::string_view describe(TokenKind kind) noexcept;

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
};

/// Splits session text into tokens. Comments run from `#` to end of line.
/// A word is any run of characters other than whitespace and `{}[](),=>#`.
/// The result always ends with a newline token followed by `end`.
std::vector<Token> tokenize(std::string_view text);

}  // namespace negset::session
