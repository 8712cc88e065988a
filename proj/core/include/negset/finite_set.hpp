#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negset/universe.hpp"

namespace negset {

/// Subset of a finite universe, stored as a bitset indexed by object position.
///
/// Universes of up to 64 objects use a single inline word; larger ones spill
/// to the heap. Values are immutable once built: the set operations below all
/// return fresh sets.
class FiniteSet {
 public:
  /// The empty subset of `universe`.
  explicit FiniteSet(UniversePtr universe);

  static FiniteSet full(UniversePtr universe);
  static FiniteSet from_indices(UniversePtr universe, std::span<const std::size_t> indices);
  /// Throws Error(UnknownObject) for names outside the universe.
  static FiniteSet from_names(UniversePtr universe, std::span<const std::string> names);
  static FiniteSet from_names(UniversePtr universe, std::initializer_list<std::string_view> names);
  /// Low bits of `mask` select objects 0..63; requires universe size <= 64.
  static FiniteSet from_mask(UniversePtr universe, std::uint64_t mask);

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t universe_size() const noexcept { return universe_->size(); }

  bool contains(std::size_t index) const noexcept;
  bool contains(std::string_view name) const;
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  /// Member indices in universe order.
  std::vector<std::size_t> members() const;
  std::vector<std::string> member_names() const;

  FiniteSet with(std::size_t index) const;
  FiniteSet without(std::size_t index) const;

  // The binary operations and subset test throw Error(UniverseMismatch).
  bool is_subset_of(const FiniteSet& other) const;
  FiniteSet operator|(const FiniteSet& other) const;
  FiniteSet operator&(const FiniteSet& other) const;
  FiniteSet operator-(const FiniteSet& other) const;
  /// Complement relative to the universe.
  FiniteSet complement() const;

  /// `{a,b,c}` in universe order; `{}` when empty.
  std::string to_string() const;

  friend bool operator==(const FiniteSet& lhs, const FiniteSet& rhs);

 private:
  std::size_t word_count() const noexcept { return (universe_->size() + 63) / 64; }
  std::uint64_t* words() noexcept { return heap_.empty() ? &inline_ : heap_.data(); }
  const std::uint64_t* words() const noexcept { return heap_.empty() ? &inline_ : heap_.data(); }
  void clear_padding() noexcept;

  UniversePtr universe_;
  std::uint64_t inline_ = 0;
  std::vector<std::uint64_t> heap_;
};

}  // namespace negset
