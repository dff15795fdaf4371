#include "jsclass/estree.hpp"

#include <algorithm>

#include "json.hpp"

namespace jsclass {

namespace {

using Json = nlohmann::ordered_json;

class Ingestor {
 public:
  Ingestor(FileId file, IngestReport& report) : file_(file), report_(report) {}

  NodePtr node(const Json& j);

  std::uint32_t max_line() const noexcept { return max_line_; }

 private:
  SourceSpan span_of(const Json& j);
  NodePtr optional_slot(const Json& j, const char* key);
  NodePtr required_slot(const Json& j, const char* key, std::string_view owner);
  void list(const Json& j, const char* key, AstNode& into, bool allow_holes = false);
  std::string string_field(const Json& j, const char* key, std::string_view owner, bool required = true);
  void literal(const Json& j, AstNode& n);
  NodePtr opaque(const Json& j, std::string type);

  FileId file_;
  IngestReport& report_;
  std::uint32_t max_line_ = 0;
};

SourceSpan Ingestor::span_of(const Json& j) {
  auto loc = j.find("loc");
  if (loc == j.end() || !loc->is_object()) return SourceSpan::unknown(file_);
  try {
    SourceSpan s;
    s.file_id = file_;
    s.start_line = loc->at("start").at("line").get<std::uint32_t>();
    s.start_col = loc->at("start").at("column").get<std::uint32_t>();
    s.end_line = loc->at("end").at("line").get<std::uint32_t>();
    s.end_col = loc->at("end").at("column").get<std::uint32_t>();
    max_line_ = std::max(max_line_, s.end_line);
    return s;
  } catch (const Json::exception&) {
    return SourceSpan::unknown(file_);
  }
}

NodePtr Ingestor::optional_slot(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return node(*it);
}

NodePtr Ingestor::required_slot(const Json& j, const char* key, std::string_view owner) {
  auto n = optional_slot(j, key);
  if (!n) {
    throw Error(DiagCode::BadNode, std::string(owner) + " is missing '" + key + "'", span_of(j));
  }
  return n;
}

void Ingestor::list(const Json& j, const char* key, AstNode& into, bool allow_holes) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return;
  if (!it->is_array()) {
    throw Error(DiagCode::BadNode, std::string("'") + key + "' is not an array", span_of(j));
  }
  for (const auto& item : *it) {
    if (item.is_null()) {
      if (!allow_holes) throw Error(DiagCode::BadNode, std::string("null entry in '") + key + "'");
      into.children.push_back(nullptr);
    } else {
      into.children.push_back(node(item));
    }
  }
}

std::string Ingestor::string_field(const Json& j, const char* key, std::string_view owner, bool required) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    if (!required) return {};
    throw Error(DiagCode::BadNode, std::string(owner) + " is missing '" + key + "'", span_of(j));
  }
  return it->get<std::string>();
}

void Ingestor::literal(const Json& j, AstNode& n) {
  const auto value = j.find("value");
  if (j.contains("regex")) {
    n.literal = LiteralClass::Regex;
  } else if (value == j.end() || value->is_null()) {
    n.literal = LiteralClass::Null;
  } else if (value->is_string()) {
    n.literal = LiteralClass::String;
    n.value = value->get<std::string>();
  } else if (value->is_boolean()) {
    n.literal = LiteralClass::Boolean;
  } else if (value->is_number()) {
    n.literal = LiteralClass::Number;
  } else {
    // Esprima serializes regex values as {}; other parsers may do the same.
    n.literal = LiteralClass::Regex;
  }
  n.text = string_field(j, "raw", "Literal", false);
  if (n.text.empty()) {
    if (n.literal == LiteralClass::String) {
      n.text = Json(n.value).dump();
    } else if (value != j.end()) {
      n.text = value->dump();
    }
  }
}

NodePtr Ingestor::opaque(const Json& j, std::string type) {
  auto n = make_node(NodeKind::Opaque, span_of(j));
  n->text = std::move(type);
  ++report_.opaque_nodes;
  for (const auto& [key, val] : j.items()) {
    if (key == "type" || key == "loc" || key == "range") continue;
    if (val.is_object() && val.contains("type")) {
      n->children.push_back(node(val));
    } else if (val.is_array()) {
      for (const auto& item : val) {
        if (item.is_object() && item.contains("type")) n->children.push_back(node(item));
      }
    }
  }
  return n;
}

NodePtr Ingestor::node(const Json& j) {
  if (!j.is_object()) throw Error(DiagCode::BadNode, "AST node is not an object");
  auto type_it = j.find("type");
  if (type_it == j.end() || !type_it->is_string()) {
    throw Error(DiagCode::BadNode, "AST node without a 'type'", span_of(j));
  }
  const auto type = type_it->get<std::string>();
  const NodeKind kind = kind_from_name(type);
  ++report_.nodes_loaded;
  if (kind == NodeKind::Opaque) return opaque(j, type);

  if (kind == NodeKind::Property) {
    const auto pkind = string_field(j, "kind", "Property", false);
    if (!pkind.empty() && pkind != "init") return opaque(j, type);
  }

  auto n = make_node(kind, span_of(j));
  const auto owner = kind_name(kind);
  switch (kind) {
    case NodeKind::Program:
    case NodeKind::BlockStatement:
      list(j, "body", *n);
      break;
    case NodeKind::FunctionDeclaration:
    case NodeKind::FunctionExpression:
      n->children.push_back(optional_slot(j, "id"));
      n->children.push_back(required_slot(j, "body", owner));
      list(j, "params", *n);
      if (kind == NodeKind::FunctionDeclaration && !n->children[0]) {
        throw Error(DiagCode::BadNode, "FunctionDeclaration without id", n->span);
      }
      break;
    case NodeKind::VariableDeclaration:
      n->op = string_field(j, "kind", owner, false);
      if (n->op.empty()) n->op = "var";
      list(j, "declarations", *n);
      break;
    case NodeKind::VariableDeclarator:
      n->children.push_back(required_slot(j, "id", owner));
      n->children.push_back(optional_slot(j, "init"));
      break;
    case NodeKind::ExpressionStatement:
      n->children.push_back(required_slot(j, "expression", owner));
      break;
    case NodeKind::AssignmentExpression:
    case NodeKind::BinaryExpression:
    case NodeKind::LogicalExpression:
      n->op = string_field(j, "operator", owner);
      n->children.push_back(required_slot(j, "left", owner));
      n->children.push_back(required_slot(j, "right", owner));
      break;
    case NodeKind::MemberExpression:
      n->computed = j.value("computed", false);
      n->children.push_back(required_slot(j, "object", owner));
      n->children.push_back(required_slot(j, "property", owner));
      if (!n->computed && !n->children[1]->is(NodeKind::Identifier)) {
        throw Error(DiagCode::BadNode, "non-computed member with a non-identifier property", n->span);
      }
      break;
    case NodeKind::NewExpression:
    case NodeKind::CallExpression:
      n->children.push_back(required_slot(j, "callee", owner));
      list(j, "arguments", *n);
      break;
    case NodeKind::ThisExpression:
    case NodeKind::EmptyStatement:
      break;
    case NodeKind::Identifier:
      n->text = string_field(j, "name", owner);
      if (n->text.empty()) throw Error(DiagCode::BadNode, "empty identifier", n->span);
      break;
    case NodeKind::Literal:
      literal(j, *n);
      break;
    case NodeKind::ObjectExpression:
      list(j, "properties", *n);
      break;
    case NodeKind::Property:
      n->op = "init";
      n->children.push_back(required_slot(j, "key", owner));
      n->children.push_back(required_slot(j, "value", owner));
      break;
    case NodeKind::ArrayExpression:
      list(j, "elements", *n, true);
      break;
    case NodeKind::ReturnStatement:
      n->children.push_back(optional_slot(j, "argument"));
      break;
    case NodeKind::IfStatement:
    case NodeKind::ConditionalExpression:
      n->children.push_back(required_slot(j, "test", owner));
      n->children.push_back(required_slot(j, "consequent", owner));
      if (kind == NodeKind::IfStatement) {
        n->children.push_back(optional_slot(j, "alternate"));
      } else {
        n->children.push_back(required_slot(j, "alternate", owner));
      }
      break;
    case NodeKind::ForStatement:
      n->children.push_back(optional_slot(j, "init"));
      n->children.push_back(optional_slot(j, "test"));
      n->children.push_back(optional_slot(j, "update"));
      n->children.push_back(required_slot(j, "body", owner));
      break;
    case NodeKind::WhileStatement:
      n->children.push_back(required_slot(j, "test", owner));
      n->children.push_back(required_slot(j, "body", owner));
      break;
    case NodeKind::UnaryExpression:
    case NodeKind::UpdateExpression:
      n->op = string_field(j, "operator", owner);
      n->prefix = j.value("prefix", kind == NodeKind::UnaryExpression);
      n->children.push_back(required_slot(j, "argument", owner));
      break;
    case NodeKind::SequenceExpression:
      list(j, "expressions", *n);
      break;
    case NodeKind::Opaque:
      break;
  }
  return n;
}

}  // namespace

void IngestReport::merge(const IngestReport& other) {
  files_loaded += other.files_loaded;
  nodes_loaded += other.nodes_loaded;
  opaque_nodes += other.opaque_nodes;
  diagnostics.insert(diagnostics.end(), other.diagnostics.begin(), other.diagnostics.end());
}

SourceFile ingest_estree_json(std::string_view document_text, std::string path, IngestReport* report,
                              FileId file_id) {
  Json doc;
  try {
    doc = Json::parse(document_text);
  } catch (const Json::parse_error& e) {
    throw Error(DiagCode::BadJson, path + ": " + e.what());
  }
  if (!doc.is_object() || doc.value("type", std::string{}) != "Program") {
    throw Error(DiagCode::NotAProgram, path + ": top-level node is not a Program");
  }

  IngestReport local;
  Ingestor ingestor(file_id, local);
  SourceFile file;
  file.path = std::move(path);
  try {
    file.root = ingestor.node(doc);
  } catch (const Json::exception& e) {
    throw Error(DiagCode::BadNode, file.path + ": " + e.what());
  }
  file.raw_line_count = ingestor.max_line();
  file.loc = ingestor.max_line();
  file.loc_approximate = true;
  local.files_loaded = 1;
  if (report != nullptr) report->merge(local);
  return file;
}

}  // namespace jsclass
