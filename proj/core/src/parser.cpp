#include "jsclass/parser.hpp"

#include <array>
#include <map>
#include <vector>

namespace jsclass {

namespace {

constexpr std::array<std::string_view, 12> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "<<=", ">>=", ">>>=", "&=", "|=", "^=",
};

int binary_precedence(const Token& t, bool no_in) noexcept {
  if (t.kind == TokenKind::Keyword) {
    if (t.text == "instanceof") return 7;
    if (t.text == "in") return no_in ? 0 : 7;
    return 0;
  }
  if (t.kind != TokenKind::Punctuator) return 0;
  const std::string& op = t.text;
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=" || op == "===" || op == "!==") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
  if (op == "<<" || op == ">>" || op == ">>>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return 0;
}

void check_brackets(std::span<const Token> tokens) {
  std::vector<const Token*> open;
  for (const auto& t : tokens) {
    if (t.kind != TokenKind::Punctuator) continue;
    const auto& p = t.text;
    if (p == "(" || p == "[" || p == "{") {
      open.push_back(&t);
    } else if (p == ")" || p == "]" || p == "}") {
      const char want = p == ")" ? '(' : p == "]" ? '[' : '{';
      if (open.empty() || open.back()->text[0] != want) {
        throw Error(DiagCode::Syntax,
                    "unbalanced '" + p + "' at line " + std::to_string(t.span.start_line), t.span);
      }
      open.pop_back();
    }
  }
  if (!open.empty()) {
    const Token& t = *open.back();
    throw Error(DiagCode::Syntax,
                "unclosed '" + t.text + "' opened at line " + std::to_string(t.span.start_line), t.span);
  }
}

class Parser {
 public:
  Parser(std::span<const Token> tokens, const ParseOptions& options)
      : toks_(tokens), options_(options) {}

  NodePtr program();
  Diagnostics take_diagnostics(const std::string& path);

 private:
  // --- token helpers ------------------------------------------------------
  [[nodiscard]] const Token& peek(std::size_t ahead = 0) const noexcept {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() noexcept {
    const Token& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    prev_end_ = t.span;
    return t;
  }
  [[nodiscard]] bool at_punct(std::string_view p) const noexcept { return peek().is_punct(p); }
  [[nodiscard]] bool at_keyword(std::string_view k) const noexcept { return peek().is_keyword(k); }
  [[nodiscard]] bool at_eof() const noexcept { return peek().kind == TokenKind::Eof; }
  bool eat_punct(std::string_view p) {
    if (!at_punct(p)) return false;
    next();
    return true;
  }
  void expect_punct(std::string_view p) {
    if (!at_punct(p)) unexpected(std::string("expected '") + std::string(p) + "'");
    next();
  }
  void expect_keyword(std::string_view k) {
    if (!at_keyword(k)) unexpected(std::string("expected '") + std::string(k) + "'");
    next();
  }
  [[noreturn]] void unexpected(const std::string& what = {}) const;
  [[noreturn]] void unsupported(const Token& t, const std::string& construct) const;
  void consume_semicolon();

  NodePtr start(NodeKind kind) const { return make_node(kind, peek().span); }
  NodePtr finish(NodePtr n) const {
    n->span.end_line = prev_end_.end_line;
    n->span.end_col = prev_end_.end_col;
    return n;
  }

  /// Records an opaque construct (or throws when recovery is off).
  NodePtr opaque_start(const std::string& type);

  // --- statements ---------------------------------------------------------
  NodePtr statement_recovering();
  NodePtr statement();
  NodePtr block();
  void statement_list_until_brace(AstNode& into);
  NodePtr var_declaration(bool no_in, bool with_semicolon);
  NodePtr function(bool declaration);
  NodePtr if_statement();
  NodePtr for_statement();
  NodePtr while_statement();
  NodePtr return_statement();
  NodePtr expression_statement();
  NodePtr do_while_statement();
  NodePtr switch_statement();
  NodePtr try_statement();
  NodePtr throw_statement();
  NodePtr jump_statement();
  NodePtr with_statement();
  NodePtr debugger_statement();
  NodePtr labeled_statement();
  NodePtr skip_unparsed(const Error& cause);

  // --- expressions --------------------------------------------------------
  NodePtr expression(bool no_in = false);
  NodePtr assignment(bool no_in = false);
  NodePtr conditional(bool no_in);
  NodePtr binary(int min_prec, bool no_in);
  NodePtr unary();
  NodePtr postfix();
  NodePtr left_hand_side();
  NodePtr new_expression();
  NodePtr primary();
  NodePtr array_literal();
  NodePtr object_literal();
  NodePtr property();
  NodePtr property_key();
  NodePtr identifier_name();
  NodePtr identifier();
  NodePtr literal_from(const Token& t);
  void arguments(AstNode& call);

  std::span<const Token> toks_;
  ParseOptions options_;
  std::size_t pos_ = 0;
  SourceSpan prev_end_;
  std::map<std::string, std::pair<std::size_t, SourceSpan>> opaque_counts_;
  Diagnostics recovered_;
};

void Parser::unexpected(const std::string& what) const {
  const Token& t = peek();
  std::string msg = t.kind == TokenKind::Eof ? "unexpected end of input"
                                             : "unexpected token '" + t.text + "'";
  if (!what.empty()) msg += " (" + what + ")";
  msg += " at " + std::to_string(t.span.start_line) + ":" + std::to_string(t.span.start_col);
  // Reserved words the subset never accepts point at an unsupported construct.
  const DiagCode code = t.kind == TokenKind::Keyword ? DiagCode::UnsupportedSyntax : DiagCode::Syntax;
  throw Error(code, msg, t.span);
}

void Parser::unsupported(const Token& t, const std::string& construct) const {
  throw Error(DiagCode::UnsupportedSyntax,
              construct + " is outside the supported subset at " + std::to_string(t.span.start_line) +
                  ":" + std::to_string(t.span.start_col),
              t.span);
}

void Parser::consume_semicolon() {
  if (eat_punct(";")) return;
  if (at_punct("}") || at_eof() || peek().preceded_by_newline) return;
  unexpected("missing ';'");
}

NodePtr Parser::opaque_start(const std::string& type) {
  if (!options_.recover) unsupported(peek(), type);
  auto n = start(NodeKind::Opaque);
  n->text = type;
  auto& [count, first] = opaque_counts_[type];
  if (count++ == 0) first = n->span;
  return n;
}

Diagnostics Parser::take_diagnostics(const std::string& path) {
  Diagnostics out;
  for (const auto& [type, entry] : opaque_counts_) {
    out.push_back(Diagnostic{Severity::Warning, DiagCode::OpaqueConstruct,
                             path + ": " + std::to_string(entry.first) + " " + type +
                                 " construct(s) kept as opaque nodes",
                             entry.second});
  }
  for (auto& d : recovered_) {
    d.message = path + ": " + d.message;
    out.push_back(std::move(d));
  }
  recovered_.clear();
  return out;
}

// --- statements -------------------------------------------------------------

NodePtr Parser::program() {
  auto root = make_node(NodeKind::Program, peek().span);
  while (!at_eof()) root->children.push_back(statement_recovering());
  return finish(std::move(root));
}

NodePtr Parser::statement_recovering() {
  if (!options_.recover) return statement();
  const std::size_t saved = pos_;
  const SourceSpan saved_end = prev_end_;
  try {
    return statement();
  } catch (const Error& e) {
    if (e.code() != DiagCode::Syntax && e.code() != DiagCode::UnsupportedSyntax) throw;
    pos_ = saved;
    prev_end_ = saved_end;
    return skip_unparsed(e);
  }
}

NodePtr Parser::skip_unparsed(const Error& cause) {
  auto n = start(NodeKind::Opaque);
  n->text = "Unparsed";
  recovered_.push_back(Diagnostic{Severity::Warning, cause.code(),
                                  std::string("skipped unparseable statement: ") + cause.what(),
                                  n->span});
  // Brackets are balanced (checked up front), so depth never goes negative
  // before reaching the closing brace of the enclosing list.
  int depth = 0;
  bool consumed = false;
  while (!at_eof()) {
    const Token& t = peek();
    // A line break outside any bracket ends the skipped region.
    if (depth == 0 && consumed && t.preceded_by_newline) break;
    if (t.kind == TokenKind::Punctuator) {
      if (depth == 0 && t.text == "}" && consumed) break;
      if (depth == 0 && t.text == ";") {
        next();
        break;
      }
      if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
      if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
    }
    next();
    consumed = true;
  }
  return finish(std::move(n));
}

NodePtr Parser::statement() {
  const Token& t = peek();
  switch (t.kind) {
    case TokenKind::Punctuator:
      if (t.text == "{") return block();
      if (t.text == ";") {
        auto n = start(NodeKind::EmptyStatement);
        next();
        return finish(std::move(n));
      }
      break;
    case TokenKind::Keyword:
      if (t.text == "var") return var_declaration(false, true);
      if (t.text == "function") return function(true);
      if (t.text == "if") return if_statement();
      if (t.text == "for") return for_statement();
      if (t.text == "while") return while_statement();
      if (t.text == "return") return return_statement();
      if (t.text == "do") return do_while_statement();
      if (t.text == "switch") return switch_statement();
      if (t.text == "try") return try_statement();
      if (t.text == "throw") return throw_statement();
      if (t.text == "break" || t.text == "continue") return jump_statement();
      if (t.text == "with") return with_statement();
      if (t.text == "debugger") return debugger_statement();
      break;
    case TokenKind::Identifier:
      if (peek(1).is_punct(":")) return labeled_statement();
      break;
    default:
      break;
  }
  return expression_statement();
}

NodePtr Parser::block() {
  auto n = start(NodeKind::BlockStatement);
  expect_punct("{");
  statement_list_until_brace(*n);
  expect_punct("}");
  return finish(std::move(n));
}

void Parser::statement_list_until_brace(AstNode& into) {
  while (!at_punct("}") && !at_eof()) into.children.push_back(statement_recovering());
}

NodePtr Parser::var_declaration(bool no_in, bool with_semicolon) {
  auto n = start(NodeKind::VariableDeclaration);
  n->op = "var";
  expect_keyword("var");
  do {
    auto decl = start(NodeKind::VariableDeclarator);
    decl->children.push_back(identifier());
    decl->children.push_back(eat_punct("=") ? assignment(no_in) : nullptr);
    n->children.push_back(finish(std::move(decl)));
  } while (eat_punct(","));
  if (with_semicolon) consume_semicolon();
  return finish(std::move(n));
}

NodePtr Parser::function(bool declaration) {
  auto n = start(declaration ? NodeKind::FunctionDeclaration : NodeKind::FunctionExpression);
  expect_keyword("function");
  NodePtr id;
  if (peek().kind == TokenKind::Identifier) {
    id = identifier();
  } else if (declaration) {
    unexpected("function name");
  }
  expect_punct("(");
  std::vector<NodePtr> params;
  if (!at_punct(")")) {
    do {
      params.push_back(identifier());
    } while (eat_punct(","));
  }
  expect_punct(")");
  n->children.push_back(std::move(id));
  n->children.push_back(block());
  for (auto& p : params) n->children.push_back(std::move(p));
  return finish(std::move(n));
}

NodePtr Parser::if_statement() {
  auto n = start(NodeKind::IfStatement);
  expect_keyword("if");
  expect_punct("(");
  n->children.push_back(expression());
  expect_punct(")");
  n->children.push_back(statement_recovering());
  if (at_keyword("else")) {
    next();
    n->children.push_back(statement_recovering());
  } else {
    n->children.push_back(nullptr);
  }
  return finish(std::move(n));
}

NodePtr Parser::for_statement() {
  const std::size_t saved = pos_;
  auto n = start(NodeKind::ForStatement);
  expect_keyword("for");
  expect_punct("(");
  NodePtr init;
  if (!at_punct(";")) {
    init = at_keyword("var") ? var_declaration(true, false) : expression(true);
  }
  if (at_keyword("in")) {
    // for-in: restart as an opaque construct.
    pos_ = saved;
    auto op = opaque_start("ForInStatement");
    expect_keyword("for");
    expect_punct("(");
    op->children.push_back(at_keyword("var") ? var_declaration(true, false) : left_hand_side());
    expect_keyword("in");
    op->children.push_back(expression());
    expect_punct(")");
    op->children.push_back(statement_recovering());
    return finish(std::move(op));
  }
  expect_punct(";");
  NodePtr test = at_punct(";") ? nullptr : expression();
  expect_punct(";");
  NodePtr update = at_punct(")") ? nullptr : expression();
  expect_punct(")");
  n->children.push_back(std::move(init));
  n->children.push_back(std::move(test));
  n->children.push_back(std::move(update));
  n->children.push_back(statement_recovering());
  return finish(std::move(n));
}

NodePtr Parser::while_statement() {
  auto n = start(NodeKind::WhileStatement);
  expect_keyword("while");
  expect_punct("(");
  n->children.push_back(expression());
  expect_punct(")");
  n->children.push_back(statement_recovering());
  return finish(std::move(n));
}

NodePtr Parser::return_statement() {
  auto n = start(NodeKind::ReturnStatement);
  expect_keyword("return");
  if (at_punct(";") || at_punct("}") || at_eof() || peek().preceded_by_newline) {
    n->children.push_back(nullptr);
  } else {
    n->children.push_back(expression());
  }
  consume_semicolon();
  return finish(std::move(n));
}

NodePtr Parser::expression_statement() {
  auto n = start(NodeKind::ExpressionStatement);
  n->children.push_back(expression());
  consume_semicolon();
  return finish(std::move(n));
}

NodePtr Parser::do_while_statement() {
  auto n = opaque_start("DoWhileStatement");
  expect_keyword("do");
  n->children.push_back(statement_recovering());
  expect_keyword("while");
  expect_punct("(");
  n->children.push_back(expression());
  expect_punct(")");
  eat_punct(";");
  return finish(std::move(n));
}

NodePtr Parser::switch_statement() {
  auto n = opaque_start("SwitchStatement");
  expect_keyword("switch");
  expect_punct("(");
  n->children.push_back(expression());
  expect_punct(")");
  expect_punct("{");
  while (!at_punct("}")) {
    auto c = start(NodeKind::Opaque);
    c->text = "SwitchCase";
    if (at_keyword("case")) {
      next();
      c->children.push_back(expression());
    } else {
      expect_keyword("default");
    }
    expect_punct(":");
    while (!at_punct("}") && !at_keyword("case") && !at_keyword("default") && !at_eof()) {
      c->children.push_back(statement_recovering());
    }
    n->children.push_back(finish(std::move(c)));
  }
  expect_punct("}");
  return finish(std::move(n));
}

NodePtr Parser::try_statement() {
  auto n = opaque_start("TryStatement");
  expect_keyword("try");
  n->children.push_back(block());
  bool handled = false;
  if (at_keyword("catch")) {
    auto c = start(NodeKind::Opaque);
    c->text = "CatchClause";
    next();
    expect_punct("(");
    c->children.push_back(identifier());
    expect_punct(")");
    c->children.push_back(block());
    n->children.push_back(finish(std::move(c)));
    handled = true;
  }
  if (at_keyword("finally")) {
    next();
    n->children.push_back(block());
    handled = true;
  }
  if (!handled) unexpected("catch or finally");
  return finish(std::move(n));
}

NodePtr Parser::throw_statement() {
  auto n = opaque_start("ThrowStatement");
  expect_keyword("throw");
  if (peek().preceded_by_newline) unexpected("newline after throw");
  n->children.push_back(expression());
  consume_semicolon();
  return finish(std::move(n));
}

NodePtr Parser::jump_statement() {
  auto n = opaque_start(at_keyword("break") ? "BreakStatement" : "ContinueStatement");
  next();
  if (peek().kind == TokenKind::Identifier && !peek().preceded_by_newline) {
    n->children.push_back(identifier());
  }
  consume_semicolon();
  return finish(std::move(n));
}

NodePtr Parser::with_statement() {
  auto n = opaque_start("WithStatement");
  expect_keyword("with");
  expect_punct("(");
  n->children.push_back(expression());
  expect_punct(")");
  n->children.push_back(statement_recovering());
  return finish(std::move(n));
}

NodePtr Parser::debugger_statement() {
  auto n = opaque_start("DebuggerStatement");
  expect_keyword("debugger");
  consume_semicolon();
  return finish(std::move(n));
}

NodePtr Parser::labeled_statement() {
  auto n = opaque_start("LabeledStatement");
  n->children.push_back(identifier());
  expect_punct(":");
  n->children.push_back(statement_recovering());
  return finish(std::move(n));
}

// --- expressions ------------------------------------------------------------

NodePtr Parser::expression(bool no_in) {
  auto n = start(NodeKind::SequenceExpression);
  auto first = assignment(no_in);
  if (!at_punct(",")) return first;
  n->children.push_back(std::move(first));
  while (eat_punct(",")) n->children.push_back(assignment(no_in));
  return finish(std::move(n));
}

NodePtr Parser::assignment(bool no_in) {
  auto n = start(NodeKind::AssignmentExpression);
  auto left = conditional(no_in);
  const Token& t = peek();
  if (t.kind != TokenKind::Punctuator) return left;
  bool is_assign = false;
  for (auto op : kAssignOps) is_assign = is_assign || t.text == op;
  if (!is_assign) return left;
  if (!left->is(NodeKind::Identifier) && !left->is(NodeKind::MemberExpression)) {
    unexpected("invalid assignment target");
  }
  n->op = next().text;
  n->children.push_back(std::move(left));
  n->children.push_back(assignment(no_in));
  return finish(std::move(n));
}

NodePtr Parser::conditional(bool no_in) {
  auto n = start(NodeKind::ConditionalExpression);
  auto test = binary(1, no_in);
  if (!eat_punct("?")) return test;
  n->children.push_back(std::move(test));
  n->children.push_back(assignment(false));
  expect_punct(":");
  n->children.push_back(assignment(no_in));
  return finish(std::move(n));
}

NodePtr Parser::binary(int min_prec, bool no_in) {
  const SourceSpan begin = peek().span;
  auto left = unary();
  for (;;) {
    const int prec = binary_precedence(peek(), no_in);
    if (prec == 0 || prec < min_prec) return left;
    const std::string op = next().text;
    auto right = binary(prec + 1, no_in);
    auto n = make_node(op == "||" || op == "&&" ? NodeKind::LogicalExpression : NodeKind::BinaryExpression,
                       begin);
    n->op = op;
    n->children.push_back(std::move(left));
    n->children.push_back(std::move(right));
    left = finish(std::move(n));
  }
}

NodePtr Parser::unary() {
  const Token& t = peek();
  const bool unary_punct =
      t.kind == TokenKind::Punctuator && (t.text == "!" || t.text == "~" || t.text == "+" || t.text == "-");
  const bool unary_word =
      t.kind == TokenKind::Keyword && (t.text == "typeof" || t.text == "void" || t.text == "delete");
  if (unary_punct || unary_word) {
    auto n = start(NodeKind::UnaryExpression);
    n->op = next().text;
    n->prefix = true;
    n->children.push_back(unary());
    return finish(std::move(n));
  }
  if (t.is_punct("++") || t.is_punct("--")) {
    auto n = start(NodeKind::UpdateExpression);
    n->op = next().text;
    n->prefix = true;
    n->children.push_back(unary());
    return finish(std::move(n));
  }
  return postfix();
}

NodePtr Parser::postfix() {
  auto n = start(NodeKind::UpdateExpression);
  auto operand = left_hand_side();
  if ((at_punct("++") || at_punct("--")) && !peek().preceded_by_newline) {
    n->op = next().text;
    n->prefix = false;
    n->children.push_back(std::move(operand));
    return finish(std::move(n));
  }
  return operand;
}

NodePtr Parser::left_hand_side() {
  const SourceSpan begin = peek().span;
  NodePtr expr = at_keyword("new") ? new_expression() : primary();
  for (;;) {
    if (eat_punct(".")) {
      auto m = make_node(NodeKind::MemberExpression, begin);
      m->children.push_back(std::move(expr));
      m->children.push_back(identifier_name());
      expr = finish(std::move(m));
    } else if (eat_punct("[")) {
      auto m = make_node(NodeKind::MemberExpression, begin);
      m->computed = true;
      m->children.push_back(std::move(expr));
      m->children.push_back(expression());
      expect_punct("]");
      expr = finish(std::move(m));
    } else if (at_punct("(")) {
      auto c = make_node(NodeKind::CallExpression, begin);
      c->children.push_back(std::move(expr));
      arguments(*c);
      expr = finish(std::move(c));
    } else {
      return expr;
    }
  }
}

NodePtr Parser::new_expression() {
  const SourceSpan begin = peek().span;
  expect_keyword("new");
  NodePtr callee = at_keyword("new") ? new_expression() : primary();
  for (;;) {
    if (eat_punct(".")) {
      auto m = make_node(NodeKind::MemberExpression, callee->span);
      m->children.push_back(std::move(callee));
      m->children.push_back(identifier_name());
      callee = finish(std::move(m));
    } else if (eat_punct("[")) {
      auto m = make_node(NodeKind::MemberExpression, callee->span);
      m->computed = true;
      m->children.push_back(std::move(callee));
      m->children.push_back(expression());
      expect_punct("]");
      callee = finish(std::move(m));
    } else {
      break;
    }
  }
  auto n = make_node(NodeKind::NewExpression, begin);
  n->children.push_back(std::move(callee));
  if (at_punct("(")) arguments(*n);
  return finish(std::move(n));
}

void Parser::arguments(AstNode& call) {
  expect_punct("(");
  if (!at_punct(")")) {
    do {
      call.children.push_back(assignment());
    } while (eat_punct(","));
  }
  expect_punct(")");
}

NodePtr Parser::primary() {
  const Token& t = peek();
  switch (t.kind) {
    case TokenKind::Identifier:
      return identifier();
    case TokenKind::Number:
    case TokenKind::String:
    case TokenKind::Boolean:
    case TokenKind::Null:
    case TokenKind::Regex:
      return literal_from(next());
    case TokenKind::Keyword:
      if (t.text == "this") {
        auto n = start(NodeKind::ThisExpression);
        next();
        return finish(std::move(n));
      }
      if (t.text == "function") return function(false);
      unexpected();
    case TokenKind::Punctuator:
      if (t.text == "(") {
        next();
        auto inner = expression();
        expect_punct(")");
        return inner;
      }
      if (t.text == "[") return array_literal();
      if (t.text == "{") return object_literal();
      unexpected();
    case TokenKind::Eof:
      unexpected();
  }
  unexpected();
}

NodePtr Parser::array_literal() {
  auto n = start(NodeKind::ArrayExpression);
  expect_punct("[");
  while (!at_punct("]")) {
    if (at_punct(",")) {
      next();
      n->children.push_back(nullptr);  // hole
      continue;
    }
    n->children.push_back(assignment());
    if (!at_punct("]")) expect_punct(",");
  }
  expect_punct("]");
  return finish(std::move(n));
}

NodePtr Parser::object_literal() {
  auto n = start(NodeKind::ObjectExpression);
  expect_punct("{");
  while (!at_punct("}")) {
    n->children.push_back(property());
    if (!at_punct("}")) expect_punct(",");
  }
  expect_punct("}");
  return finish(std::move(n));
}

NodePtr Parser::property() {
  const Token& t = peek();
  const Token& after = peek(1);
  const bool accessor = t.kind == TokenKind::Identifier && (t.text == "get" || t.text == "set") &&
                        !after.is_punct(":") && !after.is_punct(",") && !after.is_punct("}");
  if (accessor) {
    auto n = opaque_start("Property");
    next();
    n->children.push_back(property_key());
    auto fn = start(NodeKind::FunctionExpression);
    expect_punct("(");
    std::vector<NodePtr> params;
    if (!at_punct(")")) {
      do {
        params.push_back(identifier());
      } while (eat_punct(","));
    }
    expect_punct(")");
    fn->children.push_back(nullptr);
    fn->children.push_back(block());
    for (auto& p : params) fn->children.push_back(std::move(p));
    n->children.push_back(finish(std::move(fn)));
    return finish(std::move(n));
  }
  auto n = start(NodeKind::Property);
  n->op = "init";
  n->children.push_back(property_key());
  expect_punct(":");
  n->children.push_back(assignment());
  return finish(std::move(n));
}

NodePtr Parser::property_key() {
  const Token& t = peek();
  if (t.kind == TokenKind::String || t.kind == TokenKind::Number) return literal_from(next());
  return identifier_name();
}

NodePtr Parser::identifier_name() {
  const Token& t = peek();
  if (t.kind != TokenKind::Identifier && t.kind != TokenKind::Keyword && t.kind != TokenKind::Boolean &&
      t.kind != TokenKind::Null) {
    unexpected("property name");
  }
  next();
  return make_identifier(t.text, t.span);
}

NodePtr Parser::identifier() {
  const Token& t = peek();
  if (t.kind != TokenKind::Identifier) unexpected("identifier");
  next();
  return make_identifier(t.text, t.span);
}

NodePtr Parser::literal_from(const Token& t) {
  auto n = make_node(NodeKind::Literal, t.span);
  n->text = t.text;
  switch (t.kind) {
    case TokenKind::Number: n->literal = LiteralClass::Number; break;
    case TokenKind::String:
      n->literal = LiteralClass::String;
      n->value = t.value;
      break;
    case TokenKind::Boolean: n->literal = LiteralClass::Boolean; break;
    case TokenKind::Null: n->literal = LiteralClass::Null; break;
    default: n->literal = LiteralClass::Regex; break;
  }
  return n;
}

}  // namespace

SourceFile parse(std::span<const Token> tokens, std::string path, const ParseOptions& options,
                 Diagnostics* diagnostics) {
  if (tokens.empty() || tokens.back().kind != TokenKind::Eof) {
    throw Error(DiagCode::Syntax, path + ": token stream does not end with eof");
  }
  check_brackets(tokens);
  Parser parser(tokens, options);
  SourceFile file;
  file.root = parser.program();
  auto diags = parser.take_diagnostics(path);
  if (diagnostics != nullptr) {
    diagnostics->insert(diagnostics->end(), diags.begin(), diags.end());
  }
  file.path = std::move(path);
  return file;
}

SourceFile parse_source(std::string_view source_text, std::string path, const ParseOptions& options,
                        Diagnostics* diagnostics, FileId file_id) {
  const auto tokens = tokenize(source_text, file_id);
  auto file = parse(tokens, std::move(path), options, diagnostics);
  const auto counts = count_loc(source_text);
  file.raw_line_count = counts.raw_lines;
  file.loc = counts.loc;
  return file;
}

}  // namespace jsclass
