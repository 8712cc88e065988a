// Reference model for negotiation sets over at most 32 objects.
// Each operator is evaluated object by object straight from its membership
// condition; nothing here touches the library's bitset code paths.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "negset/negotiation_set.hpp"

namespace ref {

struct Pair {
  std::uint32_t nec = 0;
  std::uint32_t adm = 0;
  friend bool operator==(const Pair&, const Pair&) = default;
};

inline bool bit(std::uint32_t mask, unsigned x) { return (mask >> x) & 1u; }

template <class Predicate>
std::uint32_t collect(unsigned n, Predicate in) {
  std::uint32_t out = 0;
  for (unsigned x = 0; x < n; ++x) {
    if (in(x)) out |= 1u << x;
  }
  return out;
}

inline bool all_nec(const std::vector<Pair>& f, unsigned x) {
  for (const auto& p : f) if (!bit(p.nec, x)) return false;
  return true;
}
inline bool all_adm(const std::vector<Pair>& f, unsigned x) {
  for (const auto& p : f) if (!bit(p.adm, x)) return false;
  return true;
}
inline bool any_nec(const std::vector<Pair>& f, unsigned x) {
  for (const auto& p : f) if (bit(p.nec, x)) return true;
  return false;
}
inline bool any_adm(const std::vector<Pair>& f, unsigned x) {
  for (const auto& p : f) if (bit(p.adm, x)) return true;
  return false;
}

// x is necessary in the meet only if every agent needs it; allowed if anyone allows it.
inline Pair odot(unsigned n, const std::vector<Pair>& f) {
  return {collect(n, [&](unsigned x) { return all_nec(f, x); }),
          collect(n, [&](unsigned x) { return any_adm(f, x); })};
}

// x is allowed only if everyone allows it; necessary if additionally someone needs it.
inline Pair oplus(unsigned n, const std::vector<Pair>& f) {
  return {collect(n, [&](unsigned x) { return all_adm(f, x) && any_nec(f, x); }),
          collect(n, [&](unsigned x) { return all_adm(f, x); })};
}

inline Pair unite(unsigned n, const std::vector<Pair>& f) {
  return {collect(n, [&](unsigned x) { return any_nec(f, x); }),
          collect(n, [&](unsigned x) { return any_adm(f, x); })};
}

inline Pair intersect(unsigned n, const std::vector<Pair>& f) {
  return {collect(n, [&](unsigned x) { return all_nec(f, x); }),
          collect(n, [&](unsigned x) { return all_adm(f, x); })};
}

inline Pair complement(unsigned n, Pair a) {
  return {collect(n, [&](unsigned x) { return !bit(a.adm, x); }),
          collect(n, [&](unsigned x) { return !bit(a.nec, x); })};
}

inline Pair difference(unsigned n, Pair a, Pair b) {
  return {collect(n, [&](unsigned x) { return bit(a.nec, x) && !bit(b.adm, x); }),
          collect(n, [&](unsigned x) { return bit(a.adm, x) && !bit(b.nec, x); })};
}

inline bool subset(std::uint32_t a, std::uint32_t b) {
  for (unsigned x = 0; x < 32; ++x) {
    if (bit(a, x) && !bit(b, x)) return false;
  }
  return true;
}

// Pairwise contradiction labels; label[i][j] for i < j.
struct Relations {
  unsigned n = 0;
  std::vector<std::pair<unsigned, unsigned>> strong;
  std::vector<std::pair<unsigned, unsigned>> weak;
  std::vector<std::pair<unsigned, unsigned>> dominance;
};

inline bool disc(const Relations& r, Pair a) {
  for (auto [x, y] : r.strong) {
    if (bit(a.adm, x) && bit(a.adm, y)) return false;
  }
  for (auto [x, y] : r.weak) {
    if (bit(a.adm, x) && bit(a.adm, y) && (bit(a.nec, x) || bit(a.nec, y))) return false;
  }
  return true;
}

// All 3^n pairs with nec ⊆ adm.
inline std::vector<Pair> all_pairs(unsigned n) {
  std::vector<Pair> out;
  for (std::uint32_t adm = 0; adm < (1u << n); ++adm) {
    for (std::uint32_t nec = 0; nec < (1u << n); ++nec) {
      if ((nec & ~adm) == 0) out.push_back({nec, adm});
    }
  }
  return out;
}

inline Pair random_pair(unsigned n, std::mt19937_64& rng) {
  Pair p;
  std::uniform_int_distribution<int> three(0, 2);
  for (unsigned x = 0; x < n; ++x) {
    int v = three(rng);  // 0 rejected, 1 admissible, 2 necessary
    if (v >= 1) p.adm |= 1u << x;
    if (v == 2) p.nec |= 1u << x;
  }
  return p;
}

// Random strong/weak labelling; dominance is a random total order or empty.
inline Relations random_relations(unsigned n, std::mt19937_64& rng) {
  Relations r;
  r.n = n;
  std::uniform_int_distribution<int> label(0, 3);
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = x + 1; y < n; ++y) {
      int l = label(rng);
      if (l == 1) r.strong.emplace_back(x, y);
      if (l == 2) r.weak.emplace_back(x, y);
    }
  }
  if (std::bernoulli_distribution(0.7)(rng)) {
    std::vector<unsigned> order(n);
    for (unsigned i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) r.dominance.emplace_back(order[i], order[j]);
    }
  }
  return r;
}

inline Pair random_disc_pair(const Relations& r, std::mt19937_64& rng) {
  for (;;) {
    Pair p = random_pair(r.n, rng);
    if (disc(r, p)) return p;
  }
}

inline negset::NegotiationSet to_negset(const negset::UniversePtr& u, Pair p) {
  return negset::NegotiationSet(negset::FiniteSet::from_mask(u, p.nec), negset::FiniteSet::from_mask(u, p.adm));
}

inline Pair from_negset(const negset::NegotiationSet& s) {
  Pair p;
  for (auto i : s.necessity().members()) p.nec |= 1u << i;
  for (auto i : s.admissibility().members()) p.adm |= 1u << i;
  return p;
}

}  // namespace ref
