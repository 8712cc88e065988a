#include "negset/session/lexer.hpp"

#include <cctype>
#include <string_view>

namespace negset::session {

namespace {

constexpr std::string_view kPunctuation = "{}[](),=>#";

bool is_word_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && kPunctuation.find(c) == std::string_view::npos;
}

}  // namespace

SessionError::SessionError(ErrorCode code, int line, int column, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column),
      detail_(message) {}

std::string_view describe(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::word: return "word";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::comma: return "','";
    case TokenKind::equals: return "'='";
    case TokenKind::greater: return "'>'";
    case TokenKind::newline: return "end of line";
    case TokenKind::end: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;

  auto push = [&](TokenKind kind, std::string value, int col) {
    tokens.push_back(Token{kind, std::move(value), line, col});
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      push(TokenKind::newline, "", column);
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        ++i;
        ++column;
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++column;
      continue;
    }
    TokenKind kind = TokenKind::word;
    switch (c) {
      case '{': kind = TokenKind::lbrace; break;
      case '}': kind = TokenKind::rbrace; break;
      case '[': kind = TokenKind::lbracket; break;
      case ']': kind = TokenKind::rbracket; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      case ',': kind = TokenKind::comma; break;
      case '=': kind = TokenKind::equals; break;
      case '>': kind = TokenKind::greater; break;
      default: break;
    }
    if (kind != TokenKind::word) {
      push(kind, std::string(1, c), column);
      ++i;
      ++column;
      continue;
    }
    std::size_t start = i;
    int start_col = column;
    while (i < text.size() && is_word_char(text[i])) {
      ++i;
      ++column;
    }
    push(TokenKind::word, std::string(text.substr(start, i - start)), start_col);
  }
  push(TokenKind::newline, "", column);
  push(TokenKind::end, "", column);
  return tokens;
}

}  // namespace negset::session
