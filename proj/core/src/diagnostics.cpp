#include "jsclass/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace jsclass {

namespace {

constexpr std::array<std::pair<DiagCode, std::string_view>, 22> kCodes = {{
    {DiagCode::BadJson, "bad_json"},
    {DiagCode::NotAProgram, "not_a_program"},
    {DiagCode::BadNode, "bad_node"},
    {DiagCode::BadRoot, "bad_root"},
    {DiagCode::EmptyInput, "empty_input"},
    {DiagCode::DuplicatePath, "duplicate_path"},
    {DiagCode::IoError, "io_error"},
    {DiagCode::LexError, "lex_error"},
    {DiagCode::Syntax, "syntax"},
    {DiagCode::UnsupportedSyntax, "unsupported_syntax"},
    {DiagCode::OpaqueConstruct, "opaque_construct"},
    {DiagCode::DuplicateFunction, "duplicate_function"},
    {DiagCode::ComputedMember, "computed_member"},
    {DiagCode::MemberConflict, "member_conflict"},
    {DiagCode::NotInstantiated, "not_instantiated"},
    {DiagCode::PrototypeReassigned, "prototype_reassigned"},
    {DiagCode::InheritanceCycle, "inheritance_cycle"},
    {DiagCode::BadMetric, "bad_metric"},
    {DiagCode::BadRange, "bad_range"},
    {DiagCode::BadColor, "bad_color"},
    {DiagCode::BadModel, "bad_model"},
    {DiagCode::SchemaMismatch, "schema_mismatch"},
}};

}  // namespace

std::string_view severity_name(Severity s) noexcept {
  switch (s) {
    case Severity::Info:
      return "info";
    case Severity::Warning:
      return "warning";
    case Severity::Error:
      return "error";
  }
  return "error";
}

std::optional<Severity> severity_from_name(std::string_view name) noexcept {
  if (name == "info") return Severity::Info;
  if (name == "warning") return Severity::Warning;
  if (name == "error") return Severity::Error;
  return std::nullopt;
}

std::string_view code_name(DiagCode code) noexcept {
  for (const auto& [c, n] : kCodes) {
    if (c == code) return n;
  }
  return "unknown";
}

std::optional<DiagCode> code_from_name(std::string_view name) noexcept {
  for (const auto& [c, n] : kCodes) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::size_t count_severity(const Diagnostics& diags, Severity s) {
  return static_cast<std::size_t>(
      std::count_if(diags.begin(), diags.end(), [s](const Diagnostic& d) { return d.severity == s; }));
}

}  // namespace jsclass
