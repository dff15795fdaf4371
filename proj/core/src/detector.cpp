#include "jsclass/detector.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <unordered_map>

namespace jsclass {

namespace {

bool is_plain_assignment(const AstNode& n) {
  return n.is(NodeKind::AssignmentExpression) && n.op == "=" && n.child(0) != nullptr &&
         n.child(1) != nullptr;
}

const AstNode* non_computed_member(const AstNode* n) {
  if (n == nullptr || !n->is(NodeKind::MemberExpression) || n->computed) return nullptr;
  return n;
}

/// `C.prototype` -> "C".
const std::string* prototype_owner(const AstNode* n) {
  const AstNode* m = non_computed_member(n);
  if (m == nullptr) return nullptr;
  const AstNode* obj = slots::object(*m);
  const AstNode* prop = slots::property(*m);
  if (obj == nullptr || !obj->is(NodeKind::Identifier) || !prop->is_identifier("prototype")) return nullptr;
  return &obj->text;
}

/// `Object.create(C.prototype)` with exactly one argument -> "C".
const std::string* object_create_target(const AstNode& n) {
  if (!n.is(NodeKind::CallExpression)) return nullptr;
  const AstNode* callee = non_computed_member(slots::callee(n));
  if (callee == nullptr || !slots::object(*callee)->is_identifier("Object") ||
      !slots::property(*callee)->is_identifier("create")) {
    return nullptr;
  }
  const auto args = slots::arguments(n);
  if (args.size() != 1 || !args[0]) return nullptr;
  return prototype_owner(args[0].get());
}

/// `new C(...)` with an identifier callee -> "C".
const std::string* new_target(const AstNode& n) {
  if (!n.is(NodeKind::NewExpression)) return nullptr;
  const AstNode* callee = slots::callee(n);
  if (callee == nullptr || !callee->is(NodeKind::Identifier)) return nullptr;
  return &callee->text;
}

bool is_function(const AstNode* n) {
  return n != nullptr && (n->is(NodeKind::FunctionExpression) || n->is(NodeKind::FunctionDeclaration));
}

void for_each_node(const Program& program, const std::function<void(const AstNode&)>& fn) {
  for (const auto& file : program.files) {
    if (!file.root) continue;
    walk_pruned(*file.root, [&](const AstNode& n) {
      fn(n);
      return true;
    });
  }
}

void add_member(MemberSets& sets, std::string name, MemberKind kind, MemberOrigin origin, SourceSpan span) {
  auto& target = kind == MemberKind::Method ? sets.methods : sets.attributes;
  // try_emplace keeps the first occurrence on duplicates.
  target.try_emplace(name, Member{name, kind, origin, span});
}

/// Property name for a key node of an object literal.
std::optional<std::string> key_name(const AstNode* key) {
  if (key == nullptr) return std::nullopt;
  if (key->is(NodeKind::Identifier)) return key->text;
  if (key->is(NodeKind::Literal)) {
    return key->literal == LiteralClass::String ? key->value : key->text;
  }
  return std::nullopt;
}

/// Prototype-side members of every name, gathered in one pass.
struct PrototypeIndex {
  std::unordered_map<std::string, MemberSets> members;
  std::unordered_map<std::string, Diagnostics> warnings;
};

PrototypeIndex build_prototype_index(const Program& program, const std::string* only = nullptr) {
  PrototypeIndex index;
  for_each_node(program, [&](const AstNode& n) {
    if (!is_plain_assignment(n)) return;
    const AstNode* left = slots::left(n);
    const AstNode* right = slots::right(n);

    if (const std::string* owner = prototype_owner(left)) {
      // C.prototype = { ... }
      if (only != nullptr && *owner != *only) return;
      if (!right->is(NodeKind::ObjectExpression)) return;
      auto& sets = index.members[*owner];
      for (const auto& prop : right->children) {
        if (!prop) continue;
        if (!prop->is(NodeKind::Property)) {
          index.warnings[*owner].push_back(
              Diagnostic{Severity::Warning, DiagCode::ComputedMember,
                         *owner + ".prototype literal: accessor property ignored", prop->span});
          continue;
        }
        auto name = key_name(prop->child(0));
        if (!name) continue;
        const MemberKind kind =
            prop->child(1) != nullptr && prop->child(1)->is(NodeKind::FunctionExpression) ? MemberKind::Method
                                                                                           : MemberKind::Attribute;
        add_member(sets, *name, kind, MemberOrigin::PrototypeLiteral, prop->span);
      }
      return;
    }

    if (left == nullptr || !left->is(NodeKind::MemberExpression)) return;
    const std::string* owner = prototype_owner(slots::object(*left));
    if (owner == nullptr) return;
    if (only != nullptr && *owner != *only) return;
    if (left->computed) {
      index.warnings[*owner].push_back(Diagnostic{Severity::Warning, DiagCode::ComputedMember,
                                                  *owner + ".prototype[...]: computed member name ignored",
                                                  left->span});
      return;
    }
    const MemberKind kind = right->is(NodeKind::FunctionExpression) ? MemberKind::Method : MemberKind::Attribute;
    add_member(index.members[*owner], slots::property(*left)->text, kind, MemberOrigin::PrototypeAssignment,
               left->span);
  });
  return index;
}

/// `this.x = ...` in the candidate's own body, skipping nested functions.
void collect_this_members(const CandidateFunction& candidate, MemberSets& sets) {
  if (candidate.body == nullptr) return;
  walk_pruned(*candidate.body, [&](const AstNode& n) {
    if (is_function(&n)) return false;
    if (!is_plain_assignment(n)) return true;
    const AstNode* left = non_computed_member(slots::left(n));
    if (left == nullptr || !slots::object(*left)->is(NodeKind::ThisExpression)) return true;
    const MemberKind kind =
        slots::right(n)->is(NodeKind::FunctionExpression) ? MemberKind::Method : MemberKind::Attribute;
    add_member(sets, slots::property(*left)->text, kind, MemberOrigin::ThisAssignment, left->span);
    return true;
  });
}

MemberSets members_for(const CandidateFunction& candidate, PrototypeIndex& index, Diagnostics* diagnostics) {
  MemberSets sets;
  collect_this_members(candidate, sets);
  if (auto it = index.members.find(candidate.name); it != index.members.end()) {
    for (auto& [name, m] : it->second.attributes) sets.attributes.try_emplace(name, m);
    for (auto& [name, m] : it->second.methods) sets.methods.try_emplace(name, m);
  }
  if (diagnostics != nullptr) {
    if (auto it = index.warnings.find(candidate.name); it != index.warnings.end()) {
      diagnostics->insert(diagnostics->end(), it->second.begin(), it->second.end());
    }
    for (const auto& [name, m] : sets.methods) {
      if (sets.attributes.contains(name)) {
        diagnostics->push_back(Diagnostic{Severity::Warning, DiagCode::MemberConflict,
                                          candidate.name + "." + name + " is both an attribute and a method",
                                          m.span});
      }
    }
  }
  return sets;
}

}  // namespace

std::string_view declaration_kind_name(DeclarationKind k) noexcept {
  return k == DeclarationKind::FunctionDeclaration ? "function_declaration" : "var_assigned_function_expression";
}

std::string_view member_kind_name(MemberKind k) noexcept {
  return k == MemberKind::Method ? "method" : "attribute";
}

std::string_view member_origin_name(MemberOrigin o) noexcept {
  switch (o) {
    case MemberOrigin::ThisAssignment: return "this_assignment";
    case MemberOrigin::PrototypeAssignment: return "prototype_assignment";
    case MemberOrigin::PrototypeLiteral: return "prototype_literal";
  }
  return "this_assignment";
}

std::string_view pattern_name(InheritancePattern p) noexcept {
  return p == InheritancePattern::PrototypeNew ? "prototype_new" : "prototype_object_create";
}

std::optional<MemberOrigin> member_origin_from_name(std::string_view s) noexcept {
  for (auto o : {MemberOrigin::ThisAssignment, MemberOrigin::PrototypeAssignment, MemberOrigin::PrototypeLiteral}) {
    if (member_origin_name(o) == s) return o;
  }
  return std::nullopt;
}

std::optional<InheritancePattern> pattern_from_name(std::string_view s) noexcept {
  for (auto p : {InheritancePattern::PrototypeNew, InheritancePattern::PrototypeObjectCreate}) {
    if (pattern_name(p) == s) return p;
  }
  return std::nullopt;
}

CandidateMap collect_candidates(const Program& program, Diagnostics* diagnostics) {
  CandidateMap out;
  auto add = [&](const std::string& name, DeclarationKind kind, const AstNode& fn) {
    CandidateFunction c{name, kind, slots::function_body(fn), fn.span.file_id, fn.span};
    auto [it, inserted] = out.try_emplace(name, c);
    if (!inserted && diagnostics != nullptr) {
      const auto& first = program.files.at(it->second.file_id).path;
      diagnostics->push_back(Diagnostic{Severity::Warning, DiagCode::DuplicateFunction,
                                        "function " + name + " declared again; keeping the one in " + first,
                                        fn.span});
    }
  };
  for_each_node(program, [&](const AstNode& n) {
    if (n.is(NodeKind::FunctionDeclaration)) {
      if (const AstNode* id = slots::function_id(n); id != nullptr && id->is(NodeKind::Identifier)) {
        add(id->text, DeclarationKind::FunctionDeclaration, n);
      }
    } else if (n.is(NodeKind::VariableDeclarator)) {
      const AstNode* id = n.child(0);
      const AstNode* init = n.child(1);
      if (id != nullptr && id->is(NodeKind::Identifier) && init != nullptr &&
          init->is(NodeKind::FunctionExpression)) {
        add(id->text, DeclarationKind::VarAssignedFunctionExpression, *init);
      }
    } else if (is_plain_assignment(n)) {
      const AstNode* left = slots::left(n);
      const AstNode* right = slots::right(n);
      if (left->is(NodeKind::Identifier) && right->is(NodeKind::FunctionExpression)) {
        add(left->text, DeclarationKind::VarAssignedFunctionExpression, *right);
      }
    }
  });
  return out;
}

std::map<std::string, std::size_t> collect_instantiations(const Program& program) {
  std::map<std::string, std::size_t> counts;
  for_each_node(program, [&](const AstNode& n) {
    if (const std::string* c = new_target(n)) {
      ++counts[*c];
    } else if (const std::string* p = object_create_target(n)) {
      ++counts[*p];
    }
  });
  return counts;
}

MemberSets extract_members(const CandidateFunction& candidate, const Program& program, Diagnostics* diagnostics) {
  auto index = build_prototype_index(program, &candidate.name);
  return members_for(candidate, index, diagnostics);
}

OOModel detect_classes(const Program& program) {
  OOModel model;
  const auto candidates = collect_candidates(program, &model.diagnostics);
  const auto instantiations = collect_instantiations(program);
  auto index = build_prototype_index(program);

  for (const auto& file : program.files) model.packages[file.path];

  for (const auto& [name, candidate] : candidates) {
    if (!instantiations.contains(name)) {
      model.diagnostics.push_back(Diagnostic{Severity::Info, DiagCode::NotInstantiated,
                                             "function " + name + " is never instantiated; not a class",
                                             candidate.span});
      continue;
    }
    auto sets = members_for(candidate, index, &model.diagnostics);
    ClassEntity entity;
    entity.name = name;
    entity.attributes = std::move(sets.attributes);
    entity.methods = std::move(sets.methods);
    entity.file = program.files.at(candidate.file_id).path;
    entity.span = candidate.span;
    model.packages[entity.file].push_back(name);
    model.classes.emplace(name, std::move(entity));
  }
  return model;
}

void detect_inheritance(OOModel& model, const Program& program) {
  model.edges.clear();
  for (auto& [name, c] : model.classes) {
    c.superclass.reset();
    c.children.clear();
  }

  // Every matching assignment in program order; later ones override earlier.
  std::vector<InheritanceEdge> found;
  std::map<std::string, std::size_t> last_for_subclass;
  for_each_node(program, [&](const AstNode& n) {
    if (!is_plain_assignment(n)) return;
    const std::string* sub = prototype_owner(slots::left(n));
    if (sub == nullptr) return;
    const AstNode& right = *slots::right(n);
    InheritanceEdge edge;
    if (const std::string* sup = new_target(right)) {
      edge = {*sub, *sup, InheritancePattern::PrototypeNew, n.span};
    } else if (const std::string* sup2 = object_create_target(right)) {
      edge = {*sub, *sup2, InheritancePattern::PrototypeObjectCreate, n.span};
    } else {
      return;
    }
    if (!model.classes.contains(edge.subclass) || !model.classes.contains(edge.superclass)) return;
    if (auto it = last_for_subclass.find(edge.subclass); it != last_for_subclass.end()) {
      model.diagnostics.push_back(Diagnostic{Severity::Warning, DiagCode::PrototypeReassigned,
                                             edge.subclass + ".prototype assigned again; last assignment wins",
                                             edge.span});
    }
    last_for_subclass[edge.subclass] = found.size();
    found.push_back(std::move(edge));
  });

  std::map<std::string, std::string> parent;
  auto reaches = [&](std::string from, const std::string& target) {
    for (;;) {
      if (from == target) return true;
      auto it = parent.find(from);
      if (it == parent.end()) return false;
      from = it->second;
    }
  };
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto& e = found[i];
    if (last_for_subclass.at(e.subclass) != i) continue;
    if (reaches(e.superclass, e.subclass)) {
      model.diagnostics.push_back(Diagnostic{Severity::Error, DiagCode::InheritanceCycle,
                                             "dropping " + e.subclass + " -> " + e.superclass +
                                                 ": it would close an inheritance cycle",
                                             e.span});
      continue;
    }
    parent[e.subclass] = e.superclass;
    model.edges.push_back(e);
  }

  std::sort(model.edges.begin(), model.edges.end(), [](const InheritanceEdge& a, const InheritanceEdge& b) {
    return std::tie(a.subclass, a.superclass) < std::tie(b.subclass, b.superclass);
  });
  for (const auto& e : model.edges) {
    model.classes.at(e.subclass).superclass = e.superclass;
    model.classes.at(e.superclass).children.insert(e.subclass);
  }
}

OOModel build_model(const Program& program) {
  auto model = detect_classes(program);
  detect_inheritance(model, program);
  return model;
}

}  // namespace jsclass
