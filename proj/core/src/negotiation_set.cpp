#include "negset/negotiation_set.hpp"

#include "negset/error.hpp"

namespace negset {

NegotiationSet::NegotiationSet(FiniteSet necessity, FiniteSet admissibility)
    : necessity_(std::move(necessity)), admissibility_(std::move(admissibility)) {
  require_same_universe(necessity_.universe(), admissibility_.universe());
  if (!necessity_.is_subset_of(admissibility_)) {
    throw Error(ErrorCode::NotDouble, "necessity " + necessity_.to_string() +
                                          " is not contained in admissibility " +
                                          admissibility_.to_string());
  }
}

std::string NegotiationSet::to_string() const {
  return "[" + necessity_.to_string() + "," + admissibility_.to_string() + "]";
}

NegotiationSet make_negset(FiniteSet necessity, FiniteSet admissibility) {
  return NegotiationSet(std::move(necessity), std::move(admissibility));
}

NegotiationSet make_negset(const UniversePtr& universe,
                           std::initializer_list<std::string_view> necessity,
                           std::initializer_list<std::string_view> admissibility) {
  return NegotiationSet(FiniteSet::from_names(universe, necessity),
                        FiniteSet::from_names(universe, admissibility));
}

}  // namespace negset
