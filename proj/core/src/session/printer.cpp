#include "negset/session/printer.hpp"

namespace negset::session {

namespace {

std::string print_members(const FiniteSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& name : set.member_names()) {
    if (!first) out += ' ';
    out += name;
    first = false;
  }
  return out + "}";
}

bool is_infix(const Expr& e) {
  return std::holds_alternative<Difference>(e.node) || std::holds_alternative<Binary>(e.node);
}

std::string operand(const Expr& e, bool right_side) {
  std::string text = print_expr(e);
  return right_side && is_infix(e) ? "(" + text + ")" : text;
}

struct ExprPrinter {
  std::string operator()(const AgentRef& n) const { return n.name; }
  std::string operator()(const BindingRef& n) const { return n.name; }
  std::string operator()(const Complement& n) const {
    std::string inner = print_expr(*n.operand);
    return is_infix(*n.operand) ? "not (" + inner + ")" : "not " + inner;
  }
  std::string operator()(const Difference& n) const {
    return operand(*n.left, false) + " minus " + operand(*n.right, true);
  }
  std::string operator()(const Binary& n) const {
    return operand(*n.left, false) + " " + std::string(keyword(n.op)) + " " + operand(*n.right, true);
  }
  std::string operator()(const Nary& n) const {
    std::string out = std::string(keyword(n.op)) + "(";
    for (std::size_t i = 0; i < n.operands.size(); ++i) {
      if (i > 0) out += ", ";
      out += print_expr(*n.operands[i]);
    }
    return out + ")";
  }
};

}  // namespace

std::string print_literal(const NegotiationSet& value) {
  return "[" + print_members(value.necessity()) + " " + print_members(value.admissibility()) + "]";
}

std::string print_expr(const Expr& expr) {
  return std::visit(ExprPrinter{}, expr.node);
}

std::string print_statement(const Statement& statement) {
  std::string out(keyword(statement.kind));
  if (statement.kind == StatementKind::let) out += " " + statement.name + " =";
  out += " " + print_expr(*statement.expr);
  if (statement.kind == StatementKind::expect && statement.expected) {
    out += " = " + print_literal(*statement.expected);
  }
  return out;
}

std::string print_script(const SessionScript& script) {
  std::string out = "universe";
  for (const auto& name : script.universe->names()) out += " " + name;
  out += "\n";
  for (const auto& agent : script.agents) {
    out += "agent " + agent.name + " = " + print_literal(agent.value) + "\n";
  }
  for (const auto& [x, y] : script.strong) out += "strong " + x + " " + y + "\n";
  for (const auto& [x, y] : script.weak) out += "weak " + x + " " + y + "\n";
  for (const auto& [x, y] : script.dominance) out += "dominance " + x + " > " + y + "\n";
  const auto& policy = script.policy;
  if (policy.kind() != ResolutionPolicy::Kind::strict) {
    out += "policy " + std::string(to_string(policy.kind()));
    if (policy.kind() == ResolutionPolicy::Kind::agent_priority) {
      for (std::size_t i = 0; i < policy.ranking().size(); ++i) {
        out += (i == 0 ? " " : " > ") + policy.ranking()[i];
      }
    }
    out += "\n";
  }
  for (const auto& statement : script.statements) out += print_statement(statement) + "\n";
  return out;
}

}  // namespace negset::session
