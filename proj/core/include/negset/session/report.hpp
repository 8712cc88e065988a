#pragma once

#include <string>

#include "negset/session/evaluator.hpp"

namespace negset::session {

// Text and JSON renderings carry the same information. Sets are listed in
// universe order, so equal inputs always render byte-identically.

std::string render_text(const SessionReport& report);
std::string render_json(const SessionReport& report);

std::string render_text(const CheckReport& report);
std::string render_json(const CheckReport& report);

}  // namespace negset::session
