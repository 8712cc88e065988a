#pragma once

#include <string>

#include "negset/session/ast.hpp"

namespace negset::session {

/// `[{a d} {a d f}]`, the literal form accepted by the parser.
std::string print_literal(const NegotiationSet& value);

/// Minimal parenthesization for the flat, left-associative operator grammar.
std::string print_expr(const Expr& expr);

std::string print_statement(const Statement& statement);

/// Canonical script text; parse_session(print_script(s)) == s.
std::string print_script(const SessionScript& script);

}  // namespace negset::session
