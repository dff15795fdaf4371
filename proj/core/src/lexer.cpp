#include "jsclass/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "jsclass/diagnostics.hpp"

namespace jsclass {

namespace {

constexpr std::array<std::string_view, 33> kReserved = {
    "break",    "case",   "catch",  "continue", "debugger", "default", "delete",
    "do",       "else",   "finally", "for",     "function", "if",      "in",
    "instanceof", "new",  "return", "switch",   "this",     "throw",   "try",
    "typeof",   "var",    "void",   "while",    "with",     "class",   "const",
    "enum",     "export", "extends", "import",  "super",
};

// Longest first so a linear scan finds the maximal munch.
constexpr std::array<std::string_view, 48> kPunctuators = {
    ">>>=", "===", "!==", ">>>", "<<=", ">>=", "<=", ">=", "==", "!=", "++", "--",
    "<<",   ">>",  "&&",  "||",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=",
    "{",    "}",   "(",   ")",   "[",   "]",   ".",  ";",  ",",  "<",  ">",  "+",
    "-",    "*",   "%",   "&",   "|",   "^",   "!",  "~",  "?",  ":",  "=",  "/",
};

bool is_ident_start(unsigned char c) noexcept {
  return std::isalpha(c) || c == '_' || c == '$' || c == '\\' || c >= 0x80;
}

bool is_ident_part(unsigned char c) noexcept { return is_ident_start(c) || std::isdigit(c); }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

int hex_value(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

class Lexer {
 public:
  Lexer(std::string_view src, FileId file) : src_(src), file_(file) {}

  std::vector<Token> run();

 private:
  [[nodiscard]] bool at_end() const noexcept { return pos_ >= src_.size(); }
  [[nodiscard]] char peek(std::size_t ahead = 0) const noexcept {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  [[nodiscard]] std::uint32_t col() const noexcept {
    return static_cast<std::uint32_t>(pos_ - line_start_);
  }

  /// Length of a line terminator at pos_, 0 if none (\n, \r\n, \r, U+2028/9).
  [[nodiscard]] std::size_t newline_length() const noexcept;
  /// U+2028, U+2029 or U+00A0 at the cursor.
  [[nodiscard]] bool at_unicode_separator() const noexcept;
  void advance_newline(std::size_t len) {
    pos_ += len;
    ++line_;
    line_start_ = pos_;
  }

  void skip_trivia();
  [[noreturn]] void fail(const std::string& message) const;
  [[nodiscard]] bool regex_allowed() const noexcept;

  void lex_identifier(Token& t);
  void lex_number(Token& t);
  void lex_string(Token& t);
  void lex_regex(Token& t);
  void lex_punctuator(Token& t);

  std::string_view src_;
  FileId file_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  std::uint32_t line_ = 1;
  bool saw_newline_ = false;
  std::vector<Token> tokens_;
};

std::size_t Lexer::newline_length() const noexcept {
  const char c = peek();
  if (c == '\n') return 1;
  if (c == '\r') return peek(1) == '\n' ? 2 : 1;
  if (static_cast<unsigned char>(c) == 0xE2 && static_cast<unsigned char>(peek(1)) == 0x80 &&
      (static_cast<unsigned char>(peek(2)) == 0xA8 || static_cast<unsigned char>(peek(2)) == 0xA9)) {
    return 3;
  }
  return 0;
}

bool Lexer::at_unicode_separator() const noexcept {
  if (static_cast<unsigned char>(peek()) < 0x80) return false;
  return newline_length() > 0 ||
         (static_cast<unsigned char>(peek()) == 0xC2 && static_cast<unsigned char>(peek(1)) == 0xA0);
}

void Lexer::fail(const std::string& message) const {
  SourceSpan s{file_, line_, col(), line_, col() + 1};
  throw Error(DiagCode::LexError,
              message + " at " + std::to_string(line_) + ":" + std::to_string(col()), s);
}

void Lexer::skip_trivia() {
  while (!at_end()) {
    if (auto nl = newline_length()) {
      advance_newline(nl);
      saw_newline_ = true;
      continue;
    }
    const auto c = static_cast<unsigned char>(peek());
    if (c == ' ' || c == '\t' || c == '\v' || c == '\f') {
      ++pos_;
    } else if (c == 0xC2 && static_cast<unsigned char>(peek(1)) == 0xA0) {
      pos_ += 2;  // no-break space
    } else if (c == 0xEF && static_cast<unsigned char>(peek(1)) == 0xBB &&
               static_cast<unsigned char>(peek(2)) == 0xBF) {
      pos_ += 3;  // stray BOM
    } else if (c == '/' && peek(1) == '/') {
      while (!at_end() && newline_length() == 0) ++pos_;
    } else if (c == '/' && peek(1) == '*') {
      pos_ += 2;
      for (;;) {
        if (at_end()) fail("unterminated comment");
        if (peek() == '*' && peek(1) == '/') {
          pos_ += 2;
          break;
        }
        if (auto nl = newline_length()) {
          advance_newline(nl);
          saw_newline_ = true;
        } else {
          ++pos_;
        }
      }
    } else {
      return;
    }
  }
}

bool Lexer::regex_allowed() const noexcept {
  if (tokens_.empty()) return true;
  const Token& prev = tokens_.back();
  switch (prev.kind) {
    case TokenKind::Identifier:
    case TokenKind::Number:
    case TokenKind::String:
    case TokenKind::Boolean:
    case TokenKind::Null:
    case TokenKind::Regex:
      return false;
    case TokenKind::Keyword:
      return prev.text != "this";
    case TokenKind::Punctuator:
      return prev.text != ")" && prev.text != "]" && prev.text != "}";
    case TokenKind::Eof:
      return true;
  }
  return true;
}

void Lexer::lex_identifier(Token& t) {
  const std::size_t start = pos_;
  while (!at_end() && is_ident_part(static_cast<unsigned char>(peek()))) {
    if (peek() == '\\') {
      if (peek(1) != 'u') fail("invalid escape in identifier");
      pos_ += 2;
      continue;
    }
    // Multi-byte sequences may encode whitespace; U+2028/9 end the name.
    if (at_unicode_separator()) break;
    ++pos_;
  }
  t.text = std::string(src_.substr(start, pos_ - start));
  if (t.text == "true" || t.text == "false") {
    t.kind = TokenKind::Boolean;
  } else if (t.text == "null") {
    t.kind = TokenKind::Null;
  } else if (is_reserved_word(t.text)) {
    t.kind = TokenKind::Keyword;
  } else {
    t.kind = TokenKind::Identifier;
  }
}

void Lexer::lex_number(Token& t) {
  const std::size_t start = pos_;
  if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
    pos_ += 2;
    if (hex_value(peek()) < 0) fail("malformed hex literal");
    while (hex_value(peek()) >= 0) ++pos_;
  } else {
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
  }
  if (!at_end() && !at_unicode_separator() && is_ident_start(static_cast<unsigned char>(peek()))) {
    fail("identifier starts immediately after numeric literal");
  }
  t.kind = TokenKind::Number;
  t.text = std::string(src_.substr(start, pos_ - start));
}

void Lexer::lex_string(Token& t) {
  const std::size_t start = pos_;
  const char quote = peek();
  ++pos_;
  std::string value;
  for (;;) {
    if (at_end() || newline_length() > 0) fail("unterminated string");
    const char c = peek();
    if (c == quote) {
      ++pos_;
      break;
    }
    if (c != '\\') {
      value.push_back(c);
      ++pos_;
      continue;
    }
    ++pos_;
    if (at_end()) fail("unterminated string");
    if (auto nl = newline_length()) {
      advance_newline(nl);  // line continuation
      continue;
    }
    const char e = peek();
    ++pos_;
    switch (e) {
      case 'n': value.push_back('\n'); break;
      case 't': value.push_back('\t'); break;
      case 'r': value.push_back('\r'); break;
      case 'b': value.push_back('\b'); break;
      case 'f': value.push_back('\f'); break;
      case 'v': value.push_back('\v'); break;
      case 'x':
      case 'u': {
        const int digits = e == 'x' ? 2 : 4;
        std::uint32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
          const int h = hex_value(peek());
          if (h < 0) fail("malformed escape sequence");
          cp = cp * 16 + static_cast<std::uint32_t>(h);
          ++pos_;
        }
        append_utf8(value, cp);
        break;
      }
      default:
        if (e >= '0' && e <= '7') {
          // Legacy octal escape, up to three digits.
          std::uint32_t cp = static_cast<std::uint32_t>(e - '0');
          for (int i = 0; i < 2 && peek() >= '0' && peek() <= '7' && cp * 8 < 256; ++i) {
            cp = cp * 8 + static_cast<std::uint32_t>(peek() - '0');
            ++pos_;
          }
          append_utf8(value, cp);
        } else {
          value.push_back(e);
        }
    }
  }
  t.kind = TokenKind::String;
  t.text = std::string(src_.substr(start, pos_ - start));
  t.value = std::move(value);
}

void Lexer::lex_regex(Token& t) {
  const std::size_t start = pos_;
  ++pos_;
  bool in_class = false;
  for (;;) {
    if (at_end() || newline_length() > 0) fail("unterminated regular expression");
    const char c = peek();
    ++pos_;
    if (c == '\\') {
      if (at_end() || newline_length() > 0) fail("unterminated regular expression");
      ++pos_;
    } else if (c == '[') {
      in_class = true;
    } else if (c == ']') {
      in_class = false;
    } else if (c == '/' && !in_class) {
      break;
    }
  }
  while (!at_end() && !at_unicode_separator() && is_ident_part(static_cast<unsigned char>(peek())) &&
         peek() != '\\') {
    ++pos_;
  }
  t.kind = TokenKind::Regex;
  t.text = std::string(src_.substr(start, pos_ - start));
}

void Lexer::lex_punctuator(Token& t) {
  const auto rest = src_.substr(pos_);
  for (auto p : kPunctuators) {
    if (rest.starts_with(p)) {
      t.kind = TokenKind::Punctuator;
      t.text = std::string(p);
      pos_ += p.size();
      return;
    }
  }
  fail(std::string("illegal character '") + peek() + "'");
}

std::vector<Token> Lexer::run() {
  if (src_.starts_with("\xEF\xBB\xBF")) pos_ = 3;
  if (src_.substr(pos_).starts_with("#!")) {
    while (!at_end() && newline_length() == 0) ++pos_;
  }
  for (;;) {
    saw_newline_ = false;
    skip_trivia();
    Token t;
    t.preceded_by_newline = saw_newline_;
    t.span.file_id = file_;
    t.span.start_line = line_;
    t.span.start_col = col();
    if (at_end()) {
      t.kind = TokenKind::Eof;
      t.span.end_line = line_;
      t.span.end_col = col();
      tokens_.push_back(std::move(t));
      break;
    }
    const auto c = static_cast<unsigned char>(peek());
    if (is_ident_start(c)) {
      lex_identifier(t);
    } else if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      lex_number(t);
    } else if (c == '"' || c == '\'') {
      lex_string(t);
    } else if (c == '/' && regex_allowed()) {
      lex_regex(t);
    } else {
      lex_punctuator(t);
    }
    t.span.end_line = line_;
    t.span.end_col = col();
    tokens_.push_back(std::move(t));
  }
  return std::move(tokens_);
}

}  // namespace

std::string_view token_kind_name(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Punctuator: return "punctuator";
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::Boolean: return "boolean";
    case TokenKind::Null: return "null";
    case TokenKind::Regex: return "regex";
    case TokenKind::Eof: return "eof";
  }
  return "eof";
}

bool is_reserved_word(std::string_view word) noexcept {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

std::vector<Token> tokenize(std::string_view source_text, FileId file_id) {
  return Lexer(source_text, file_id).run();
}

}  // namespace jsclass
