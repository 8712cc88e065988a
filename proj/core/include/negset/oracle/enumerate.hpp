#pragma once

#include <cstddef>
#include <vector>

#include "negset/negotiation_set.hpp"

namespace negset::oracle {

inline constexpr std::size_t kEnumerationCap = 12;

/// Every negotiation set over `universe`, each exactly once (3^n of them).
///
/// Order: admissibility ranges over subsets as ascending bitmasks, and for
/// each one the necessity ranges over its subsets, also ascending. Throws
/// Error(UniverseTooLarge) when the universe exceeds `cap` (or 64 objects).
std::vector<NegotiationSet> enumerate_negsets(const UniversePtr& universe,
                                              std::size_t cap = kEnumerationCap);

}  // namespace negset::oracle
