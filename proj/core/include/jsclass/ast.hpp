#pragma once

/// @file ast.hpp
/// @brief Syntax-tree representation shared by the ESTree ingestion path and
/// the built-in ES5 parser.
///
/// Nodes use the ESTree kind names for the subset the class detector cares
/// about. Anything else is kept as an `Opaque` node: its children are still
/// present and traversed, but no detection rule ever matches it.
///
/// Child slots are positional. The layout per kind is:
///
///   Program, BlockStatement           body statements...
///   FunctionDeclaration/Expression    [0] id (null for anonymous) [1] body, params...
///   VariableDeclaration               declarators...           (op = "var")
///   VariableDeclarator                [0] id [1] init (nullable)
///   ExpressionStatement               [0] expression
///   AssignmentExpression              [0] left [1] right       (op = operator)
///   MemberExpression                  [0] object [1] property  (computed flag)
///   NewExpression, CallExpression     [0] callee, arguments...
///   ObjectExpression                  properties...
///   Property                          [0] key [1] value        (op = "init")
///   ArrayExpression                   elements... (null for holes)
///   ReturnStatement                   [0] argument (nullable)
///   IfStatement                       [0] test [1] consequent [2] alternate (nullable)
///   ForStatement                      [0] init [1] test [2] update (all nullable) [3] body
///   WhileStatement                    [0] test [1] body
///   Binary/LogicalExpression          [0] left [1] right       (op = operator)
///   Unary/UpdateExpression            [0] argument             (op, prefix flag)
///   ConditionalExpression             [0] test [1] consequent [2] alternate
///   SequenceExpression                expressions...
///   Opaque                            any children             (text = original type)

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jsclass {

using FileId = std::uint32_t;

/// Source position range. Lines are 1-based, columns 0-based. A span whose
/// start line is 0 is "unknown" (e.g. ESTree input without `loc`).
struct SourceSpan {
  FileId file_id = 0;
  std::uint32_t start_line = 0;
  std::uint32_t start_col = 0;
  std::uint32_t end_line = 0;
  std::uint32_t end_col = 0;

  [[nodiscard]] bool is_known() const noexcept { return start_line > 0; }

  static SourceSpan unknown(FileId file) noexcept { return SourceSpan{file, 0, 0, 0, 0}; }

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class NodeKind : std::uint8_t {
  Program,
  FunctionDeclaration,
  FunctionExpression,
  VariableDeclaration,
  VariableDeclarator,
  ExpressionStatement,
  AssignmentExpression,
  MemberExpression,
  NewExpression,
  CallExpression,
  ThisExpression,
  Identifier,
  Literal,
  ObjectExpression,
  Property,
  ArrayExpression,
  ReturnStatement,
  BlockStatement,
  IfStatement,
  ForStatement,
  WhileStatement,
  BinaryExpression,
  LogicalExpression,
  UnaryExpression,
  UpdateExpression,
  ConditionalExpression,
  SequenceExpression,
  EmptyStatement,
  Opaque,
};

/// ESTree type name for a kind ("Opaque" for the passthrough kind).
std::string_view kind_name(NodeKind kind) noexcept;

/// Maps an ESTree type name onto a supported kind; Opaque when unsupported.
NodeKind kind_from_name(std::string_view name) noexcept;

enum class LiteralClass : std::uint8_t { None, Number, String, Boolean, Null, Regex };

struct AstNode;
using NodePtr = std::unique_ptr<AstNode>;

struct AstNode {
  NodeKind kind = NodeKind::EmptyStatement;
  SourceSpan span;
  /// Identifier name, Literal raw text, or the original ESTree type of an
  /// Opaque node.
  std::string text;
  /// Operator, declaration kind ("var") or property kind ("init").
  std::string op;
  /// Cooked value of string literals; used when a string names a property.
  std::string value;
  LiteralClass literal = LiteralClass::None;
  bool computed = false;
  bool prefix = false;
  std::vector<NodePtr> children;

  AstNode() = default;
  AstNode(NodeKind k, SourceSpan s) : kind(k), span(s) {}

  /// Child slot, or nullptr when the slot is absent or empty.
  [[nodiscard]] const AstNode* child(std::size_t index) const noexcept {
    return index < children.size() ? children[index].get() : nullptr;
  }

  [[nodiscard]] bool is(NodeKind k) const noexcept { return kind == k; }
  [[nodiscard]] bool is_identifier(std::string_view name) const noexcept {
    return kind == NodeKind::Identifier && text == name;
  }
};

NodePtr make_node(NodeKind kind, SourceSpan span);
NodePtr make_identifier(std::string name, SourceSpan span);

// Typed accessors for the positional slots documented above.
namespace slots {
inline const AstNode* function_id(const AstNode& fn) { return fn.child(0); }
inline const AstNode* function_body(const AstNode& fn) { return fn.child(1); }
inline const AstNode* left(const AstNode& n) { return n.child(0); }
inline const AstNode* right(const AstNode& n) { return n.child(1); }
inline const AstNode* object(const AstNode& member) { return member.child(0); }
inline const AstNode* property(const AstNode& member) { return member.child(1); }
inline const AstNode* callee(const AstNode& call) { return call.child(0); }
inline std::span<const NodePtr> arguments(const AstNode& call) {
  return call.children.empty() ? std::span<const NodePtr>{}
                               : std::span<const NodePtr>(call.children).subspan(1);
}
}  // namespace slots

/// Physical and logical line counts of one file.
struct LineCounts {
  std::size_t raw_lines = 0;
  std::size_t loc = 0;
  friend bool operator==(const LineCounts&, const LineCounts&) = default;
};

/// Counts physical lines and lines holding at least one character outside
/// comments and whitespace. A trailing newline does not start a new line.
LineCounts count_loc(std::string_view source_text);

struct SourceFile {
  std::string path;
  std::size_t raw_line_count = 0;
  std::size_t loc = 0;
  /// True when line counts were derived from ESTree `loc` extents rather
  /// than the original text.
  bool loc_approximate = false;
  NodePtr root;
};

struct Program {
  std::vector<SourceFile> files;
  std::size_t total_loc = 0;
  std::size_t total_raw_lines = 0;

  /// Sorts files by path, reassigns file ids to match the order and
  /// recomputes totals. Throws Error(duplicate_path) on repeated paths.
  void finalize();
};

/// Ancestor chain handed to visitors; back() is the direct parent.
using AncestorChain = std::span<const AstNode* const>;
using Visitor = std::function<void(const AstNode&, AncestorChain)>;

/// Depth-first pre-order traversal. Null child slots are skipped.
void walk(const AstNode& root, const Visitor& visitor);

/// Pre-order traversal that lets the visitor prune: returning false skips
/// the node's children.
void walk_pruned(const AstNode& root, const std::function<bool(const AstNode&)>& visitor);

std::size_t node_count(const AstNode& root);

/// Structural comparison ignoring spans. Two Opaque nodes compare equal
/// whatever their contents; an Opaque node never equals a supported one.
bool structurally_equal(const AstNode* a, const AstNode* b);

/// Deep copy, used when the same tree must feed two analyses.
NodePtr clone(const AstNode& node);

/// Re-stamps every span in the tree with a new file id.
void assign_file_id(AstNode& root, FileId id);

}  // namespace jsclass
