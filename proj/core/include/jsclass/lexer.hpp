#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jsclass/ast.hpp"
#include "jsclass/diagnostics.hpp"

namespace jsclass {

enum class TokenKind : std::uint8_t {
  Identifier,
  Keyword,
  Punctuator,
  Number,
  String,
  Boolean,
  Null,
  Regex,
  Eof,
};

std::string_view token_kind_name(TokenKind kind) noexcept;

struct Token {
  TokenKind kind = TokenKind::Eof;
  /// Lexeme exactly as written in the source.
  std::string text;
  /// Decoded contents of string literals.
  std::string value;
  SourceSpan span;
  /// A line terminator occurs between the previous token and this one.
  bool preceded_by_newline = false;

  [[nodiscard]] bool is_punct(std::string_view p) const noexcept {
    return kind == TokenKind::Punctuator && text == p;
  }
  [[nodiscard]] bool is_keyword(std::string_view k) const noexcept {
    return kind == TokenKind::Keyword && text == k;
  }
};

/// ES5 keywords plus future reserved words valid in non-strict code.
bool is_reserved_word(std::string_view word) noexcept;

/// Splits source text into tokens terminated by a single Eof token.
/// Comments are skipped; a leading BOM or `#!` line is ignored. Regex
/// literals are recognised from the previous significant token.
///
/// Throws Error(lex_error) on an unterminated string, comment or regex and
/// on characters that cannot start a token.
std::vector<Token> tokenize(std::string_view source_text, FileId file_id = 0);

}  // namespace jsclass
