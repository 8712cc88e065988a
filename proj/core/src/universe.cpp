#include "negset/universe.hpp"

#include <algorithm>
#include <cctype>

#include "negset/error.hpp"

namespace negset {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isspace(c) || std::iscntrl(c);
  });
}

}  // namespace

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::require_index(std::string_view name) const {
  if (auto idx = index_of(name)) return *idx;
  throw Error(ErrorCode::UnknownObject, "unknown object '" + std::string(name) + "'");
}

UniversePtr make_universe(std::vector<std::string> names) {
  if (names.empty()) throw Error(ErrorCode::EmptyUniverse, "universe must contain at least one object");
  std::unordered_map<std::string_view, bool> seen;
  for (const auto& name : names) {
    if (!valid_name(name)) {
      throw Error(ErrorCode::InvalidName, "invalid object name '" + name + "'");
    }
    if (!seen.emplace(name, true).second) {
      throw Error(ErrorCode::DuplicateName, "duplicate object name '" + name + "'");
    }
  }
  return UniversePtr(new Universe(std::move(names)));
}

UniversePtr letter_universe(std::size_t size) {
  std::vector<std::string> names;
  names.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (i < 26) {
      names.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names.push_back("o" + std::to_string(i));
    }
  }
  return make_universe(std::move(names));
}

bool same_universe(const UniversePtr& lhs, const UniversePtr& rhs) noexcept {
  if (lhs == rhs) return true;
  if (!lhs || !rhs) return false;
  return *lhs == *rhs;
}

void require_same_universe(const UniversePtr& lhs, const UniversePtr& rhs) {
  if (!same_universe(lhs, rhs)) {
    throw Error(ErrorCode::UniverseMismatch, "operands belong to different universes");
  }
}

}  // namespace negset
