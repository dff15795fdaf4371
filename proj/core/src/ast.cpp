#include "jsclass/ast.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "jsclass/diagnostics.hpp"

namespace jsclass {

namespace {

constexpr std::array<std::string_view, 29> kKindNames = {
    "Program",
    "FunctionDeclaration",
    "FunctionExpression",
    "VariableDeclaration",
    "VariableDeclarator",
    "ExpressionStatement",
    "AssignmentExpression",
    "MemberExpression",
    "NewExpression",
    "CallExpression",
    "ThisExpression",
    "Identifier",
    "Literal",
    "ObjectExpression",
    "Property",
    "ArrayExpression",
    "ReturnStatement",
    "BlockStatement",
    "IfStatement",
    "ForStatement",
    "WhileStatement",
    "BinaryExpression",
    "LogicalExpression",
    "UnaryExpression",
    "UpdateExpression",
    "ConditionalExpression",
    "SequenceExpression",
    "EmptyStatement",
    "Opaque",
};

void walk_impl(const AstNode& node, std::vector<const AstNode*>& chain, const Visitor& visitor) {
  visitor(node, AncestorChain(chain));
  chain.push_back(&node);
  for (const auto& c : node.children) {
    if (c) walk_impl(*c, chain, visitor);
  }
  chain.pop_back();
}

}  // namespace

std::string_view kind_name(NodeKind kind) noexcept {
  return kKindNames[static_cast<std::size_t>(kind)];
}

NodeKind kind_from_name(std::string_view name) noexcept {
  // "Opaque" is not an ESTree type; a document using it stays opaque anyway.
  for (std::size_t i = 0; i + 1 < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<NodeKind>(i);
  }
  return NodeKind::Opaque;
}

NodePtr make_node(NodeKind kind, SourceSpan span) { return std::make_unique<AstNode>(kind, span); }

NodePtr make_identifier(std::string name, SourceSpan span) {
  auto n = make_node(NodeKind::Identifier, span);
  n->text = std::move(name);
  return n;
}

LineCounts count_loc(std::string_view text) {
  LineCounts counts;
  if (text.empty()) return counts;

  bool in_block = false;
  char quote = 0;  // active string delimiter, 0 when outside strings
  bool line_has_code = false;
  bool line_open = false;

  auto end_line = [&] {
    ++counts.raw_lines;
    if (line_has_code) ++counts.loc;
    line_has_code = false;
    line_open = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') {
      // An unterminated string cannot continue past a newline unless escaped,
      // which the backslash branch below consumes.
      quote = 0;
      end_line();
      continue;
    }
    line_open = true;
    if (in_block) {
      if (c == '*' && i + 1 < text.size() && text[i + 1] == '/') {
        in_block = false;
        ++i;
      }
      continue;
    }
    if (quote != 0) {
      if (c == '\\' && i + 1 < text.size()) {
        if (text[i + 1] == '\n') {
          end_line();
          line_has_code = true;  // continuation line is still inside a string token
          line_open = true;
        }
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
      continue;
    }
    if (c == '/' && i + 1 < text.size()) {
      if (text[i + 1] == '/') {
        while (i + 1 < text.size() && text[i + 1] != '\n') ++i;
        continue;
      }
      if (text[i + 1] == '*') {
        in_block = true;
        ++i;
        continue;
      }
    }
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    line_has_code = true;
    if (c == '\'' || c == '"') quote = c;
  }
  if (line_open) end_line();
  return counts;
}

void Program::finalize() {
  std::sort(files.begin(), files.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
  for (std::size_t i = 1; i < files.size(); ++i) {
    if (files[i].path == files[i - 1].path) {
      throw Error(DiagCode::DuplicatePath, "file listed twice: " + files[i].path);
    }
  }
  total_loc = 0;
  total_raw_lines = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (files[i].root) assign_file_id(*files[i].root, static_cast<FileId>(i));
    total_loc += files[i].loc;
    total_raw_lines += files[i].raw_line_count;
  }
}

void walk(const AstNode& root, const Visitor& visitor) {
  std::vector<const AstNode*> chain;
  walk_impl(root, chain, visitor);
}

void walk_pruned(const AstNode& root, const std::function<bool(const AstNode&)>& visitor) {
  if (!visitor(root)) return;
  for (const auto& c : root.children) {
    if (c) walk_pruned(*c, visitor);
  }
}

std::size_t node_count(const AstNode& root) {
  std::size_t n = 1;
  for (const auto& c : root.children) {
    if (c) n += node_count(*c);
  }
  return n;
}

bool structurally_equal(const AstNode* a, const AstNode* b) {
  if (a == nullptr || b == nullptr) return a == b;
  if (a->kind != b->kind) return false;
  if (a->kind == NodeKind::Opaque) return true;
  if (a->text != b->text || a->op != b->op || a->computed != b->computed ||
      a->prefix != b->prefix || a->literal != b->literal) {
    return false;
  }
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i) {
    if (!structurally_equal(a->children[i].get(), b->children[i].get())) return false;
  }
  return true;
}

NodePtr clone(const AstNode& node) {
  auto copy = std::make_unique<AstNode>(node.kind, node.span);
  copy->text = node.text;
  copy->op = node.op;
  copy->value = node.value;
  copy->literal = node.literal;
  copy->computed = node.computed;
  copy->prefix = node.prefix;
  copy->children.reserve(node.children.size());
  for (const auto& c : node.children) copy->children.push_back(c ? clone(*c) : nullptr);
  return copy;
}

void assign_file_id(AstNode& root, FileId id) {
  root.span.file_id = id;
  for (auto& c : root.children) {
    if (c) assign_file_id(*c, id);
  }
}

}  // namespace jsclass
