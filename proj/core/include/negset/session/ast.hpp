#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "negset/consistency.hpp"
#include "negset/negotiation_set.hpp"

namespace negset::session {

enum class SetOp { odot, oplus, union_, inter };

std::string_view keyword(SetOp op) noexcept;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct AgentRef {
  std::string name;
};
struct BindingRef {
  std::string name;
};
struct Complement {
  ExprPtr operand;
};
struct Difference {
  ExprPtr left;
  ExprPtr right;
};
struct Binary {
  SetOp op;
  ExprPtr left;
  ExprPtr right;
};
/// `odot(A, B, C)` and friends; never empty.
struct Nary {
  SetOp op;
  std::vector<ExprPtr> operands;
};

struct Expr {
  std::variant<AgentRef, BindingRef, Complement, Difference, Binary, Nary> node;
};

template <class Node>
ExprPtr make_expr(Node node) {
  return std::make_shared<const Expr>(Expr{std::move(node)});
}

/// Structural equality.
bool operator==(const Expr& lhs, const Expr& rhs);
bool equal(const ExprPtr& lhs, const ExprPtr& rhs);

struct AgentDecl {
  std::string name;
  NegotiationSet value;
  friend bool operator==(const AgentDecl&, const AgentDecl&) = default;
};

enum class StatementKind { let, eval, assert_disc, expect };

std::string_view keyword(StatementKind kind) noexcept;

struct Statement {
  StatementKind kind;
  std::string name;  // bound name, `let` only
  ExprPtr expr;
  std::optional<NegotiationSet> expected;  // `expect` only

  friend bool operator==(const Statement& lhs, const Statement& rhs);
};

/// A parsed and validated negotiation session.
struct SessionScript {
  UniversePtr universe;
  std::vector<AgentDecl> agents;
  std::vector<NamePair> strong;
  std::vector<NamePair> weak;
  std::vector<NamePair> dominance;  // (greater, lesser)
  ContradictionSpec contradictions;
  ResolutionPolicy policy = ResolutionPolicy::strict();
  std::vector<Statement> statements;

  const AgentDecl* find_agent(std::string_view name) const;

  friend bool operator==(const SessionScript& lhs, const SessionScript& rhs);
};

}  // namespace negset::session
