#pragma once

/// @file parser.hpp
/// @brief Recursive-descent parser for an ES5 subset.
///
/// The grammar covers var/function declarations, expression, block, empty,
/// return, if/else, for and while statements, and the full ES5 expression
/// grammar (assignment, conditional, logical, binary, unary, update, call,
/// new, member, object/array literals, function expressions, sequences).
/// Automatic semicolon insertion follows the offending-token rule, with the
/// restricted productions for `return`, `break`, `continue`, `throw` and
/// postfix `++`/`--`.
///
/// Everything else (switch, try, throw, break/continue, do-while, for-in,
/// labels, with, debugger, accessor properties) is outside the subset. With
/// recovery enabled these constructs become Opaque nodes whose nested
/// statements and expressions are still parsed, and any statement that fails
/// to parse is skipped as a balanced token group. Without recovery they are
/// reported as unsupported_syntax.

#include <span>
#include <string>
#include <string_view>

#include "jsclass/ast.hpp"
#include "jsclass/diagnostics.hpp"
#include "jsclass/lexer.hpp"

namespace jsclass {

struct ParseOptions {
  bool recover = true;
};

/// Builds a Program tree from tokens ending in Eof.
///
/// Throws Error(syntax) for mismatched brackets and malformed input, and
/// Error(unsupported_syntax) for constructs outside the subset when
/// recovery is off. The returned file carries no line counts.
SourceFile parse(std::span<const Token> tokens, std::string path, const ParseOptions& options = {},
                 Diagnostics* diagnostics = nullptr);

/// tokenize + parse + count_loc for one source file.
SourceFile parse_source(std::string_view source_text, std::string path, const ParseOptions& options = {},
                        Diagnostics* diagnostics = nullptr, FileId file_id = 0);

}  // namespace jsclass
