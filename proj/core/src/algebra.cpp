#include "negset/algebra.hpp"

#include <string>

#include "negset/error.hpp"

namespace negset {

namespace {

// A family is addressed through an accessor so that the binary forms can
// reuse the generalized code without copying their operands.
template <class Get>
void check_family(std::size_t size, Get get) {
  if (size == 0) throw Error(ErrorCode::EmptyFamily, "operation needs a non-empty family");
  for (std::size_t i = 1; i < size; ++i) {
    require_same_universe(get(0).universe(), get(i).universe());
  }
}

template <class Get>
FiniteSet union_of_necessities(std::size_t size, Get get) {
  FiniteSet out = get(0).necessity();
  for (std::size_t i = 1; i < size; ++i) out = out | get(i).necessity();
  return out;
}

template <class Get>
FiniteSet inter_of_necessities(std::size_t size, Get get) {
  FiniteSet out = get(0).necessity();
  for (std::size_t i = 1; i < size; ++i) out = out & get(i).necessity();
  return out;
}

template <class Get>
FiniteSet union_of_admissibilities(std::size_t size, Get get) {
  FiniteSet out = get(0).admissibility();
  for (std::size_t i = 1; i < size; ++i) out = out | get(i).admissibility();
  return out;
}

template <class Get>
FiniteSet inter_of_admissibilities(std::size_t size, Get get) {
  FiniteSet out = get(0).admissibility();
  for (std::size_t i = 1; i < size; ++i) out = out & get(i).admissibility();
  return out;
}

template <class Get>
NegotiationSet union_impl(std::size_t size, Get get) {
  check_family(size, get);
  return NegotiationSet(union_of_necessities(size, get), union_of_admissibilities(size, get));
}

template <class Get>
NegotiationSet inter_impl(std::size_t size, Get get) {
  check_family(size, get);
  return NegotiationSet(inter_of_necessities(size, get), inter_of_admissibilities(size, get));
}

template <class Get>
NegotiationSet odot_impl(std::size_t size, Get get) {
  check_family(size, get);
  return NegotiationSet(inter_of_necessities(size, get), union_of_admissibilities(size, get));
}

template <class Get>
NegotiationSet oplus_impl(std::size_t size, Get get) {
  check_family(size, get);
  FiniteSet shared = inter_of_admissibilities(size, get);
  FiniteSet necessity = union_of_necessities(size, get) & shared;
  return NegotiationSet(std::move(necessity), std::move(shared));
}

auto span_get(std::span<const NegotiationSet> family) {
  return [family](std::size_t i) -> const NegotiationSet& { return family[i]; };
}

auto pair_get(const NegotiationSet& a, const NegotiationSet& b) {
  return [&a, &b](std::size_t i) -> const NegotiationSet& { return i == 0 ? a : b; };
}

}  // namespace

NegotiationSet complement(const NegotiationSet& a) {
  return NegotiationSet(a.admissibility().complement(), a.necessity().complement());
}

NegotiationSet difference(const NegotiationSet& a, const NegotiationSet& b) {
  require_same_universe(a.universe(), b.universe());
  return NegotiationSet(a.necessity() - b.admissibility(), a.admissibility() - b.necessity());
}

bool included(const NegotiationSet& a, const NegotiationSet& b, InclusionMode mode) {
  require_same_universe(a.universe(), b.universe());
  switch (mode) {
    case InclusionMode::full:
      return a.necessity().is_subset_of(b.necessity()) &&
             a.admissibility().is_subset_of(b.admissibility());
    case InclusionMode::necessity_only:
      return a.necessity().is_subset_of(b.necessity());
    case InclusionMode::admissibility_only:
      return a.admissibility().is_subset_of(b.admissibility());
  }
  return false;
}

NegotiationSet union_all(std::span<const NegotiationSet> family) {
  return union_impl(family.size(), span_get(family));
}

NegotiationSet inter_all(std::span<const NegotiationSet> family) {
  return inter_impl(family.size(), span_get(family));
}

NegotiationSet odot_all(std::span<const NegotiationSet> family) {
  return odot_impl(family.size(), span_get(family));
}

NegotiationSet oplus_all(std::span<const NegotiationSet> family) {
  return oplus_impl(family.size(), span_get(family));
}

NegotiationSet set_union(const NegotiationSet& a, const NegotiationSet& b) {
  return union_impl(2, pair_get(a, b));
}

NegotiationSet set_inter(const NegotiationSet& a, const NegotiationSet& b) {
  return inter_impl(2, pair_get(a, b));
}

NegotiationSet odot(const NegotiationSet& a, const NegotiationSet& b) {
  return odot_impl(2, pair_get(a, b));
}

NegotiationSet oplus(const NegotiationSet& a, const NegotiationSet& b) {
  return oplus_impl(2, pair_get(a, b));
}

NegotiationSet special(const UniversePtr& universe, SpecialKind kind, std::string_view object) {
  FiniteSet none(universe);
  switch (kind) {
    case SpecialKind::empty_n:
      return NegotiationSet(none, none);
    case SpecialKind::full_n:
      return NegotiationSet(FiniteSet::full(universe), FiniteSet::full(universe));
    case SpecialKind::half_empty:
      return NegotiationSet(none, FiniteSet::full(universe));
    case SpecialKind::point_half:
    case SpecialKind::point_full: {
      FiniteSet point = none.with(universe->require_index(object));
      if (kind == SpecialKind::point_half) return NegotiationSet(std::move(none), std::move(point));
      return NegotiationSet(point, point);
    }
  }
  throw Error(ErrorCode::InvalidName, "unknown special kind");
}

}  // namespace negset
