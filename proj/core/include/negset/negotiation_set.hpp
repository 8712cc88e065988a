#pragma once

#include <string>

#include "negset/finite_set.hpp"

namespace negset {

/// Ordered pair [necessity, admissibility] of subsets of one universe with
/// necessity ⊆ admissibility. Necessity holds what an agent deems obligatory,
/// admissibility what it deems at least allowable.
class NegotiationSet {
 public:
  /// Throws Error(UniverseMismatch) or Error(NotDouble).
  NegotiationSet(FiniteSet necessity, FiniteSet admissibility);

  const FiniteSet& necessity() const noexcept { return necessity_; }
  const FiniteSet& admissibility() const noexcept { return admissibility_; }
  const UniversePtr& universe() const noexcept { return necessity_.universe(); }

  /// Canonical form `[{a},{a,b}]`, members in universe order.
  std::string to_string() const;

  friend bool operator==(const NegotiationSet& lhs, const NegotiationSet& rhs) {
    return lhs.necessity_ == rhs.necessity_ && lhs.admissibility_ == rhs.admissibility_;
  }

 private:
  FiniteSet necessity_;
  FiniteSet admissibility_;
};

NegotiationSet make_negset(FiniteSet necessity, FiniteSet admissibility);

/// Convenience constructor from member names.
NegotiationSet make_negset(const UniversePtr& universe,
                           std::initializer_list<std::string_view> necessity,
                           std::initializer_list<std::string_view> admissibility);

}  // namespace negset
