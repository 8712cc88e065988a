#pragma once

#include <span>
#include <string_view>

#include "negset/negotiation_set.hpp"

namespace negset {

enum class InclusionMode {
  full,                // A¹ ⊆ B¹ and A² ⊆ B²
  necessity_only,      // A¹ ⊆ B¹
  admissibility_only,  // A² ⊆ B²
};

enum class SpecialKind {
  empty_n,     // [∅, ∅]
  full_n,      // [X, X]
  half_empty,  // [∅, X]
  point_half,  // [∅, {x}]
  point_full,  // [{x}, {x}]
};

/// [X∖A², X∖A¹]
NegotiationSet complement(const NegotiationSet& a);

/// [A¹∖B², A²∖B¹]
NegotiationSet difference(const NegotiationSet& a, const NegotiationSet& b);

bool included(const NegotiationSet& a, const NegotiationSet& b,
              InclusionMode mode = InclusionMode::full);

// Generalized operations over a non-empty family sharing one universe.
// All of them throw Error(EmptyFamily) and Error(UniverseMismatch).

/// [∪A¹, ∪A²]
NegotiationSet union_all(std::span<const NegotiationSet> family);
/// [∩A¹, ∩A²]
NegotiationSet inter_all(std::span<const NegotiationSet> family);
/// Minimalization of necessities: [∩A¹, ∪A²].
NegotiationSet odot_all(std::span<const NegotiationSet> family);
/// Relative maximalization of necessities: [(∪A¹) ∩ (∩A²), ∩A²].
NegotiationSet oplus_all(std::span<const NegotiationSet> family);

// Binary forms are the two-element case of the generalized operations.
NegotiationSet set_union(const NegotiationSet& a, const NegotiationSet& b);
NegotiationSet set_inter(const NegotiationSet& a, const NegotiationSet& b);
NegotiationSet odot(const NegotiationSet& a, const NegotiationSet& b);
NegotiationSet oplus(const NegotiationSet& a, const NegotiationSet& b);

/// Constant sets. Point kinds require `object` to name a member of the
/// universe (Error(UnknownObject) otherwise); other kinds ignore it.
NegotiationSet special(const UniversePtr& universe, SpecialKind kind,
                       std::string_view object = {});

}  // namespace negset
