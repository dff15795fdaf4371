#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jsclass/ast.hpp"

namespace jsclass {

enum class Severity { Info, Warning, Error };

std::string_view severity_name(Severity s) noexcept;
std::optional<Severity> severity_from_name(std::string_view name) noexcept;

/// Closed set of machine-readable diagnostic and error codes.
enum class DiagCode {
  BadJson,            // document is not valid JSON
  NotAProgram,        // top-level ESTree node is not a Program
  BadNode,            // ESTree node lacks required fields
  BadRoot,            // input root missing or unreadable
  EmptyInput,         // nothing ingestible under the root
  DuplicatePath,      // two files with the same path
  IoError,            // read/write failure
  LexError,           // illegal character, unterminated string/comment
  Syntax,             // malformed source, mismatched brackets
  UnsupportedSyntax,  // construct outside the parsed subset
  OpaqueConstruct,    // construct kept as an opaque node (recovery)
  DuplicateFunction,  // candidate name declared more than once
  ComputedMember,     // computed member name ignored
  MemberConflict,     // name is both attribute and method
  NotInstantiated,    // near miss: function never instantiated
  PrototypeReassigned,// several inheritance assignments for one class
  InheritanceCycle,   // edge dropped to keep the hierarchy acyclic
  BadMetric,          // unknown metric name
  BadRange,           // min greater than max
  BadColor,           // unparseable color
  BadModel,           // stored model JSON malformed
  SchemaMismatch,     // stored model has another schema version
};

std::string_view code_name(DiagCode code) noexcept;
std::optional<DiagCode> code_from_name(std::string_view name) noexcept;

struct Diagnostic {
  Severity severity = Severity::Warning;
  DiagCode code = DiagCode::BadNode;
  std::string message;
  std::optional<SourceSpan> span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

std::size_t count_severity(const Diagnostics& diags, Severity s);

/// Exception carrying a diagnostic code; thrown for hard failures.
class Error : public std::runtime_error {
 public:
  Error(DiagCode code, const std::string& message, std::optional<SourceSpan> span = {})
      : std::runtime_error(std::string(code_name(code)) + ": " + message),
        code_(code),
        span_(span) {}

  [[nodiscard]] DiagCode code() const noexcept { return code_; }
  [[nodiscard]] const std::optional<SourceSpan>& span() const noexcept { return span_; }

 private:
  DiagCode code_;
  std::optional<SourceSpan> span_;
};

}  // namespace jsclass
