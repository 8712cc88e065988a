#include "negset/oracle/enumerate.hpp"

#include <algorithm>
#include <cstdint>

#include "negset/error.hpp"

namespace negset::oracle {

std::vector<NegotiationSet> enumerate_negsets(const UniversePtr& universe, std::size_t cap) {
  const auto n = universe->size();
  if (n > cap || n > 64) {
    throw Error(ErrorCode::UniverseTooLarge, "cannot enumerate a universe of " + std::to_string(n) +
                                                 " objects (cap " + std::to_string(cap) + ")");
  }
  std::vector<NegotiationSet> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  out.reserve(total);

  const std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
  std::vector<std::uint64_t> subs;
  std::uint64_t adm = 0;
  do {
    subs.clear();
    for (std::uint64_t s = adm;; s = (s - 1) & adm) {
      subs.push_back(s);
      if (s == 0) break;
    }
    FiniteSet admissibility = FiniteSet::from_mask(universe, adm);
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
      out.emplace_back(FiniteSet::from_mask(universe, *it), admissibility);
    }
    ++adm;
  } while (adm != limit);
  return out;
}

}  // namespace negset::oracle
