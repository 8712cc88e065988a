#include "negset/finite_set.hpp"

#include <algorithm>
#include <bit>

#include "negset/error.hpp"

namespace negset {

FiniteSet::FiniteSet(UniversePtr universe) : universe_(std::move(universe)) {
  if (!universe_) throw Error(ErrorCode::EmptyUniverse, "finite set requires a universe");
  if (universe_->size() > 64) heap_.assign(word_count(), 0);
}

FiniteSet FiniteSet::full(UniversePtr universe) {
  FiniteSet set(std::move(universe));
  std::fill_n(set.words(), set.word_count(), ~std::uint64_t{0});
  set.clear_padding();
  return set;
}

FiniteSet FiniteSet::from_indices(UniversePtr universe, std::span<const std::size_t> indices) {
  FiniteSet set(std::move(universe));
  for (auto idx : indices) {
    if (idx >= set.universe_size()) {
      throw Error(ErrorCode::UnknownObject, "object index " + std::to_string(idx) + " out of range");
    }
    set.words()[idx / 64] |= std::uint64_t{1} << (idx % 64);
  }
  return set;
}

FiniteSet FiniteSet::from_names(UniversePtr universe, std::span<const std::string> names) {
  FiniteSet set(std::move(universe));
  for (const auto& name : names) {
    auto idx = set.universe_->require_index(name);
    set.words()[idx / 64] |= std::uint64_t{1} << (idx % 64);
  }
  return set;
}

FiniteSet FiniteSet::from_names(UniversePtr universe, std::initializer_list<std::string_view> names) {
  std::vector<std::string> owned(names.begin(), names.end());
  return from_names(std::move(universe), owned);
}

FiniteSet FiniteSet::from_mask(UniversePtr universe, std::uint64_t mask) {
  FiniteSet set(std::move(universe));
  if (set.universe_size() > 64) {
    throw Error(ErrorCode::UniverseTooLarge, "mask construction needs a universe of at most 64 objects");
  }
  set.inline_ = mask;
  set.clear_padding();
  return set;
}

void FiniteSet::clear_padding() noexcept {
  auto rem = universe_->size() % 64;
  if (rem != 0) words()[word_count() - 1] &= (std::uint64_t{1} << rem) - 1;
}

bool FiniteSet::contains(std::size_t index) const noexcept {
  if (index >= universe_size()) return false;
  return (words()[index / 64] >> (index % 64)) & 1U;
}

bool FiniteSet::contains(std::string_view name) const {
  auto idx = universe_->index_of(name);
  return idx && contains(*idx);
}

std::size_t FiniteSet::count() const noexcept {
  std::size_t total = 0;
  const auto* w = words();
  for (std::size_t i = 0; i < word_count(); ++i) total += std::popcount(w[i]);
  return total;
}

bool FiniteSet::empty() const noexcept {
  const auto* w = words();
  return std::all_of(w, w + word_count(), [](std::uint64_t x) { return x == 0; });
}

std::vector<std::size_t> FiniteSet::members() const {
  std::vector<std::size_t> out;
  const auto* w = words();
  for (std::size_t i = 0; i < word_count(); ++i) {
    for (auto bits = w[i]; bits != 0; bits &= bits - 1) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<std::string> FiniteSet::member_names() const {
  std::vector<std::string> out;
  for (auto idx : members()) out.push_back(universe_->name(idx));
  return out;
}

FiniteSet FiniteSet::with(std::size_t index) const {
  if (index >= universe_size()) {
    throw Error(ErrorCode::UnknownObject, "object index " + std::to_string(index) + " out of range");
  }
  FiniteSet out = *this;
  out.words()[index / 64] |= std::uint64_t{1} << (index % 64);
  return out;
}

FiniteSet FiniteSet::without(std::size_t index) const {
  FiniteSet out = *this;
  if (index < universe_size()) out.words()[index / 64] &= ~(std::uint64_t{1} << (index % 64));
  return out;
}

bool FiniteSet::is_subset_of(const FiniteSet& other) const {
  require_same_universe(universe_, other.universe_);
  const auto* a = words();
  const auto* b = other.words();
  for (std::size_t i = 0; i < word_count(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

FiniteSet FiniteSet::operator|(const FiniteSet& other) const {
  require_same_universe(universe_, other.universe_);
  FiniteSet out = *this;
  auto* a = out.words();
  const auto* b = other.words();
  for (std::size_t i = 0; i < word_count(); ++i) a[i] |= b[i];
  return out;
}

FiniteSet FiniteSet::operator&(const FiniteSet& other) const {
  require_same_universe(universe_, other.universe_);
  FiniteSet out = *this;
  auto* a = out.words();
  const auto* b = other.words();
  for (std::size_t i = 0; i < word_count(); ++i) a[i] &= b[i];
  return out;
}

FiniteSet FiniteSet::operator-(const FiniteSet& other) const {
  require_same_universe(universe_, other.universe_);
  FiniteSet out = *this;
  auto* a = out.words();
  const auto* b = other.words();
  for (std::size_t i = 0; i < word_count(); ++i) a[i] &= ~b[i];
  return out;
}

FiniteSet FiniteSet::complement() const {
  FiniteSet out = *this;
  auto* a = out.words();
  for (std::size_t i = 0; i < word_count(); ++i) a[i] = ~a[i];
  out.clear_padding();
  return out;
}

std::string FiniteSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto idx : members()) {
    if (!first) out += ',';
    out += universe_->name(idx);
    first = false;
  }
  out += '}';
  return out;
}

bool operator==(const FiniteSet& lhs, const FiniteSet& rhs) {
  if (!same_universe(lhs.universe_, rhs.universe_)) return false;
  return std::equal(lhs.words(), lhs.words() + lhs.word_count(), rhs.words());
}

}  // namespace negset
