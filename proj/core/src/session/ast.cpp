#include "negset/session/ast.hpp"

#include <algorithm>

namespace negset::session {

std::string_view keyword(SetOp op) noexcept {
  switch (op) {
    case SetOp::odot: return "odot";
    case SetOp::oplus: return "oplus";
    case SetOp::union_: return "union";
    case SetOp::inter: return "inter";
  }
  return "?";
}

std::string_view keyword(StatementKind kind) noexcept {
  switch (kind) {
    case StatementKind::let: return "let";
    case StatementKind::eval: return "eval";
    case StatementKind::assert_disc: return "assert_disc";
    case StatementKind::expect: return "expect";
  }
  return "?";
}

bool equal(const ExprPtr& lhs, const ExprPtr& rhs) {
  if (lhs == rhs) return true;
  if (!lhs || !rhs) return false;
  return *lhs == *rhs;
}

namespace {

struct NodeEqual {
  bool operator()(const AgentRef& a, const AgentRef& b) const { return a.name == b.name; }
  bool operator()(const BindingRef& a, const BindingRef& b) const { return a.name == b.name; }
  bool operator()(const Complement& a, const Complement& b) const { return equal(a.operand, b.operand); }
  bool operator()(const Difference& a, const Difference& b) const {
    return equal(a.left, b.left) && equal(a.right, b.right);
  }
  bool operator()(const Binary& a, const Binary& b) const {
    return a.op == b.op && equal(a.left, b.left) && equal(a.right, b.right);
  }
  bool operator()(const Nary& a, const Nary& b) const {
    return a.op == b.op && std::equal(a.operands.begin(), a.operands.end(), b.operands.begin(),
                                      b.operands.end(), equal);
  }
  template <class A, class B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

}  // namespace

bool operator==(const Expr& lhs, const Expr& rhs) {
  return std::visit(NodeEqual{}, lhs.node, rhs.node);
}

bool operator==(const Statement& lhs, const Statement& rhs) {
  return lhs.kind == rhs.kind && lhs.name == rhs.name && equal(lhs.expr, rhs.expr) &&
         lhs.expected == rhs.expected;
}

const AgentDecl* SessionScript::find_agent(std::string_view name) const {
  auto it = std::find_if(agents.begin(), agents.end(), [&](const AgentDecl& a) { return a.name == name; });
  return it == agents.end() ? nullptr : &*it;
}

bool operator==(const SessionScript& lhs, const SessionScript& rhs) {
  return same_universe(lhs.universe, rhs.universe) && lhs.agents == rhs.agents &&
         lhs.strong == rhs.strong && lhs.weak == rhs.weak && lhs.dominance == rhs.dominance &&
         lhs.contradictions == rhs.contradictions && lhs.policy == rhs.policy &&
         lhs.statements == rhs.statements;
}

}  // namespace negset::session
