#pragma once

/// @file detector.hpp
/// @brief Recovers emulated classes and prototype inheritance from a Program.
///
/// A function `C` is a class when the program also contains `new C(...)` or
/// `Object.create(C.prototype)`. Its attributes and methods come from
/// `this.x = ...` in the body of `C` (nested functions excluded),
/// `C.prototype.x = ...` anywhere, and object literals assigned whole to
/// `C.prototype`. A right-hand side that is a function expression makes a
/// method; anything else, including a variable that happens to hold a
/// function, makes an attribute.
///
/// `C2.prototype = new C1(...)` and `C2.prototype = Object.create(C1.prototype)`
/// make C2 a subclass of C1 when both are classes.
///
/// Names live in one global namespace shared by every file of the program.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jsclass/ast.hpp"
#include "jsclass/diagnostics.hpp"

namespace jsclass {

enum class DeclarationKind { FunctionDeclaration, VarAssignedFunctionExpression };

struct CandidateFunction {
  std::string name;
  DeclarationKind declaration_kind = DeclarationKind::FunctionDeclaration;
  /// Body of the function; points into the Program it was collected from.
  const AstNode* body = nullptr;
  FileId file_id = 0;
  SourceSpan span;
};

using CandidateMap = std::map<std::string, CandidateFunction>;

enum class MemberKind { Attribute, Method };
enum class MemberOrigin { ThisAssignment, PrototypeAssignment, PrototypeLiteral };

struct Member {
  std::string name;
  MemberKind kind = MemberKind::Attribute;
  MemberOrigin origin = MemberOrigin::ThisAssignment;
  SourceSpan span;

  friend bool operator==(const Member&, const Member&) = default;
};

using MemberSet = std::map<std::string, Member>;

struct MemberSets {
  MemberSet attributes;
  MemberSet methods;
};

struct ClassEntity {
  std::string name;
  MemberSet attributes;
  MemberSet methods;
  std::optional<std::string> superclass;
  std::set<std::string> children;
  /// Path of the defining file; the class's package.
  std::string file;
  SourceSpan span;

  friend bool operator==(const ClassEntity&, const ClassEntity&) = default;
};

enum class InheritancePattern { PrototypeNew, PrototypeObjectCreate };

struct InheritanceEdge {
  std::string subclass;
  std::string superclass;
  InheritancePattern pattern = InheritancePattern::PrototypeNew;
  SourceSpan span;

  friend bool operator==(const InheritanceEdge&, const InheritanceEdge&) = default;
};

struct OOModel {
  std::map<std::string, ClassEntity> classes;
  /// Sorted by (subclass, superclass).
  std::vector<InheritanceEdge> edges;
  /// Every program file, by path, with the names of the classes it defines.
  std::map<std::string, std::vector<std::string>> packages;
  Diagnostics diagnostics;

  friend bool operator==(const OOModel&, const OOModel&) = default;
};

std::string_view declaration_kind_name(DeclarationKind k) noexcept;
std::string_view member_kind_name(MemberKind k) noexcept;
std::string_view member_origin_name(MemberOrigin o) noexcept;
std::string_view pattern_name(InheritancePattern p) noexcept;
std::optional<MemberOrigin> member_origin_from_name(std::string_view s) noexcept;
std::optional<InheritancePattern> pattern_from_name(std::string_view s) noexcept;

/// Function declarations (at any depth) plus function expressions assigned
/// to a bare name with `var C = function` or `C = function`. On repeated
/// names the first in path/source order wins and a warning is recorded.
CandidateMap collect_candidates(const Program& program, Diagnostics* diagnostics = nullptr);

/// Occurrences of `new C(...)` with a bare-identifier callee and of
/// `Object.create(C.prototype)` with exactly one argument, per name C.
std::map<std::string, std::size_t> collect_instantiations(const Program& program);

/// Attribute and method sets of one candidate. Same-name entries merge
/// (first span kept); a name that is both attribute and method stays in both.
MemberSets extract_members(const CandidateFunction& candidate, const Program& program,
                           Diagnostics* diagnostics = nullptr);

/// Classes (no edges yet) with packages filled in. Candidates that are never
/// instantiated are reported as info-level near misses.
OOModel detect_classes(const Program& program);

/// Adds inheritance edges and derives superclass/children. For a class whose
/// prototype is set more than once the last assignment wins; an edge that
/// would close a cycle is dropped with an error diagnostic.
void detect_inheritance(OOModel& model, const Program& program);

/// detect_classes followed by detect_inheritance.
OOModel build_model(const Program& program);

}  // namespace jsclass
