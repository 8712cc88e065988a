#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace negset {

/// Ordered, non-empty collection of distinct object names. The index of an
/// object is its position in declaration order and never changes.
class Universe {
 public:
  std::size_t size() const noexcept { return names_.size(); }
  std::span<const std::string> names() const noexcept { return names_; }
  const std::string& name(std::size_t index) const { return names_.at(index); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws Error(UnknownObject) when the name is not declared.
  std::size_t require_index(std::string_view name) const;

  friend bool operator==(const Universe& lhs, const Universe& rhs) {
    return lhs.names_ == rhs.names_;
  }

 private:
  explicit Universe(std::vector<std::string> names);
  friend std::shared_ptr<const Universe> make_universe(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Throws Error(EmptyUniverse | DuplicateName | InvalidName).
UniversePtr make_universe(std::vector<std::string> names);

/// Universe {a, b, c, ...} of the given size; names past 'z' become o26, o27, ...
UniversePtr letter_universe(std::size_t size);

/// True when both pointers denote the same universe (pointer or content equality).
bool same_universe(const UniversePtr& lhs, const UniversePtr& rhs) noexcept;

/// Throws Error(UniverseMismatch) unless same_universe(lhs, rhs).
void require_same_universe(const UniversePtr& lhs, const UniversePtr& rhs);

}  // namespace negset
