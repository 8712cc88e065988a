#pragma once

#include <string_view>

#include "negset/session/ast.hpp"
#include "negset/session/lexer.hpp"

namespace negset::session {

/// Parses and validates a session script.
///
/// Syntax problems raise SessionError with ErrorCode::ParseError; semantic
/// problems (missing or late universe, duplicate or unknown names, sets that
/// are not double, malformed relations or policy) raise it with
/// ErrorCode::ValidationError. Both carry the offending line and column.
SessionScript parse_session(std::string_view text);

/// Words that cannot name agents or bindings.
bool is_reserved(std::string_view word) noexcept;

}  // namespace negset::session
