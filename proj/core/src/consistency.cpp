#include "negset/consistency.hpp"

#include <algorithm>

#include "negset/algebra.hpp"
#include "negset/error.hpp"

namespace negset {

namespace {

using IndexPair = std::pair<std::size_t, std::size_t>;

std::string pairs_to_string(const UniversePtr& universe, const std::vector<ObjectPair>& pairs) {
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += ' ';
    out += pair_to_string(universe, p);
  }
  return out;
}

std::vector<ObjectPair> normalize(const Universe& universe, std::span<const IndexPair> raw) {
  std::vector<ObjectPair> out;
  out.reserve(raw.size());
  for (auto [x, y] : raw) {
    if (x >= universe.size() || y >= universe.size()) {
      throw Error(ErrorCode::UnknownObject, "contradiction pair refers to an unknown object");
    }
    if (x == y) {
      throw Error(ErrorCode::ReflexivePair,
                  "object '" + universe.name(x) + "' cannot contradict itself");
    }
    out.push_back(ObjectPair::of(x, y));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ContradictionSpec::ContradictionSpec(UniversePtr universe)
    : universe_(std::move(universe)),
      links_(universe_->size() * universe_->size(), Link::none),
      dominance_matrix_(universe_->size() * universe_->size(), false) {}

ContradictionSpec::ContradictionSpec(UniversePtr universe, std::span<const IndexPair> strong,
                                     std::span<const IndexPair> weak,
                                     std::span<const IndexPair> dominance)
    : ContradictionSpec(std::move(universe)) {
  const auto& u = *universe_;
  const auto n = u.size();
  strong_ = normalize(u, strong);
  weak_ = normalize(u, weak);
  for (const auto& p : strong_) {
    links_[p.first * n + p.second] = links_[p.second * n + p.first] = Link::strong;
  }
  for (const auto& p : weak_) {
    if (links_[p.first * n + p.second] == Link::strong) {
      throw Error(ErrorCode::OverlappingKinds, "pair " + pair_to_string(universe_, p) +
                                                   " is declared both strong and weak");
    }
    links_[p.first * n + p.second] = links_[p.second * n + p.first] = Link::weak;
  }

  for (auto [x, y] : dominance) {
    if (x >= n || y >= n) {
      throw Error(ErrorCode::UnknownObject, "dominance pair refers to an unknown object");
    }
    if (x == y) {
      throw Error(ErrorCode::DominanceNotStrictOrder,
                  "dominance is not irreflexive: " + u.name(x) + " > " + u.name(x));
    }
    dominance_matrix_[x * n + y] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!dominance_matrix_[x * n + y]) continue;
      if (dominance_matrix_[y * n + x]) {
        throw Error(ErrorCode::DominanceNotStrictOrder,
                    "dominance is not asymmetric: " + u.name(x) + " > " + u.name(y) + " and " +
                        u.name(y) + " > " + u.name(x));
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (dominance_matrix_[y * n + z] && !dominance_matrix_[x * n + z]) {
          throw Error(ErrorCode::DominanceNotStrictOrder,
                      "dominance is not transitive: " + u.name(x) + " > " + u.name(y) + " > " +
                          u.name(z) + " but not " + u.name(x) + " > " + u.name(z));
        }
      }
      dominance_.emplace_back(x, y);
    }
  }
}

ContradictionSpec::Link ContradictionSpec::link(std::size_t x, std::size_t y) const noexcept {
  const auto n = universe_->size();
  if (x >= n || y >= n) return Link::none;
  return links_[x * n + y];
}

bool ContradictionSpec::strong(std::size_t x, std::size_t y) const noexcept {
  return link(x, y) == Link::strong;
}

bool ContradictionSpec::weak(std::size_t x, std::size_t y) const noexcept {
  return link(x, y) == Link::weak;
}

bool ContradictionSpec::dominates(std::size_t x, std::size_t y) const noexcept {
  const auto n = universe_->size();
  if (x >= n || y >= n) return false;
  return dominance_matrix_[x * n + y];
}

bool operator==(const ContradictionSpec& lhs, const ContradictionSpec& rhs) {
  return same_universe(lhs.universe_, rhs.universe_) && lhs.strong_ == rhs.strong_ &&
         lhs.weak_ == rhs.weak_ && lhs.dominance_ == rhs.dominance_;
}

ContradictionSpec make_contradiction_spec(const UniversePtr& universe,
                                          std::span<const NamePair> strong,
                                          std::span<const NamePair> weak,
                                          std::span<const NamePair> dominance) {
  auto resolve = [&](std::span<const NamePair> pairs) {
    std::vector<IndexPair> out;
    out.reserve(pairs.size());
    for (const auto& [x, y] : pairs) {
      out.emplace_back(universe->require_index(x), universe->require_index(y));
    }
    return out;
  };
  auto s = resolve(strong);
  auto w = resolve(weak);
  auto d = resolve(dominance);
  return ContradictionSpec(universe, s, w, d);
}

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::strong_in_admissibility: return "strong-in-admissibility";
    case ViolationKind::weak_with_necessity: return "weak-with-necessity";
  }
  return "unknown";
}

std::vector<DiscViolation> disc_violations(const NegotiationSet& a, const ContradictionSpec& spec) {
  require_same_universe(a.universe(), spec.universe());
  std::vector<DiscViolation> out;
  const auto& adm = a.admissibility();
  const auto& nec = a.necessity();
  for (const auto& p : spec.strong_pairs()) {
    if (adm.contains(p.first) && adm.contains(p.second)) {
      out.push_back({ViolationKind::strong_in_admissibility, p});
    }
  }
  for (const auto& p : spec.weak_pairs()) {
    if (adm.contains(p.first) && adm.contains(p.second) &&
        (nec.contains(p.first) || nec.contains(p.second))) {
      out.push_back({ViolationKind::weak_with_necessity, p});
    }
  }
  return out;
}

bool is_disc(const NegotiationSet& a, const ContradictionSpec& spec) {
  return disc_violations(a, spec).empty();
}

std::string pair_to_string(const UniversePtr& universe, ObjectPair pair) {
  return "(" + universe->name(pair.first) + "," + universe->name(pair.second) + ")";
}

std::string violation_to_string(const UniversePtr& universe, const DiscViolation& violation) {
  return std::string(to_string(violation.kind)) + " " + pair_to_string(universe, violation.pair);
}

ResolutionPolicy ResolutionPolicy::agent_priority(std::vector<std::string> ranking) {
  if (ranking.empty()) {
    throw Error(ErrorCode::ValidationError, "agent-priority needs at least one agent");
  }
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    for (std::size_t j = i + 1; j < ranking.size(); ++j) {
      if (ranking[i] == ranking[j]) {
        throw Error(ErrorCode::ValidationError,
                    "agent '" + ranking[i] + "' appears twice in the priority ranking");
      }
    }
  }
  return ResolutionPolicy(Kind::agent_priority, std::move(ranking));
}

std::optional<std::size_t> ResolutionPolicy::rank_of(std::string_view agent) const {
  auto it = std::find(ranking_.begin(), ranking_.end(), agent);
  if (it == ranking_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ranking_.begin());
}

std::string_view to_string(ResolutionPolicy::Kind kind) noexcept {
  switch (kind) {
    case ResolutionPolicy::Kind::strict: return "strict";
    case ResolutionPolicy::Kind::object_dominance: return "dominance";
    case ResolutionPolicy::Kind::agent_priority: return "agent-priority";
    case ResolutionPolicy::Kind::fewest_necessities: return "fewest-necessities";
  }
  return "unknown";
}

std::string_view to_string(FailureReason reason) noexcept {
  switch (reason) {
    case FailureReason::strict_conflict: return "strict-conflict";
    case FailureReason::unordered_pair: return "unordered-pair";
    case FailureReason::ambiguous_provenance: return "ambiguous-provenance";
    case FailureReason::incomparable: return "incomparable";
    case FailureReason::residual_violation: return "residual-violation";
  }
  return "unknown";
}

ResolutionOutcome resolve_odot(const NegotiationSet& a, const NegotiationSet& b,
                               const ContradictionSpec& spec, const ResolutionPolicy& policy,
                               const OperandNames& names) {
  require_same_universe(a.universe(), b.universe());
  require_same_universe(a.universe(), spec.universe());
  const auto& universe = a.universe();

  for (const auto* operand : {&a, &b}) {
    auto violations = disc_violations(*operand, spec);
    if (!violations.empty()) {
      throw Error(ErrorCode::InputNotDisc,
                  "operand " + operand->to_string() + " is not in DISC: " +
                      violation_to_string(universe, violations.front()));
    }
  }

  NegotiationSet raw = odot(a, b);
  auto violations = disc_violations(raw, spec);
  if (violations.empty()) return Resolved{raw, FiniteSet(universe)};

  std::vector<ObjectPair> conflicts;
  for (const auto& v : violations) conflicts.push_back(v.pair);

  // Weak violations cannot arise from DISC operands; treat them as unrepairable.
  bool weak_present = std::any_of(violations.begin(), violations.end(), [](const DiscViolation& v) {
    return v.kind == ViolationKind::weak_with_necessity;
  });
  if (weak_present && policy.kind() != ResolutionPolicy::Kind::strict) {
    return Failed{FailureReason::residual_violation,
                  "weak conflict cannot be repaired: " + pairs_to_string(universe, conflicts),
                  conflicts};
  }

  FiniteSet dropped(universe);
  std::vector<ObjectPair> unresolved;

  switch (policy.kind()) {
    case ResolutionPolicy::Kind::strict:
      return Failed{FailureReason::strict_conflict,
                    "strong conflict " + pairs_to_string(universe, conflicts), conflicts};

    case ResolutionPolicy::Kind::object_dominance:
      for (const auto& p : conflicts) {
        if (spec.dominates(p.first, p.second)) {
          dropped = dropped.with(p.second);
        } else if (spec.dominates(p.second, p.first)) {
          dropped = dropped.with(p.first);
        } else {
          unresolved.push_back(p);
        }
      }
      if (!unresolved.empty()) {
        return Failed{FailureReason::unordered_pair,
                      "dominance does not order " + pairs_to_string(universe, unresolved),
                      unresolved};
      }
      break;

    case ResolutionPolicy::Kind::agent_priority:
    case ResolutionPolicy::Kind::fewest_necessities: {
      const NegotiationSet* higher = nullptr;
      if (policy.kind() == ResolutionPolicy::Kind::fewest_necessities) {
        auto left = a.necessity().count();
        auto right = b.necessity().count();
        if (left == right) {
          return Failed{FailureReason::incomparable,
                        "operands have equally many necessities (" + std::to_string(left) +
                            "); conflict " + pairs_to_string(universe, conflicts),
                        conflicts};
        }
        higher = left < right ? &a : &b;
      } else {
        if (!names.left || !names.right) {
          return Failed{FailureReason::ambiguous_provenance,
                        "operand without a single agent cannot be ranked; conflict " +
                            pairs_to_string(universe, conflicts),
                        conflicts};
        }
        auto left_rank = policy.rank_of(*names.left);
        auto right_rank = policy.rank_of(*names.right);
        for (const auto& [name, rank] : {std::pair{&*names.left, left_rank},
                                         std::pair{&*names.right, right_rank}}) {
          if (!rank) throw Error(ErrorCode::UnknownAgent, "agent '" + *name + "' is not ranked");
        }
        if (*left_rank == *right_rank) {
          return Failed{FailureReason::ambiguous_provenance,
                        "both operands come from agent " + *names.left + "; conflict " +
                            pairs_to_string(universe, conflicts),
                        conflicts};
        }
        higher = *left_rank < *right_rank ? &a : &b;
      }

      const auto& kept = higher->admissibility();
      for (const auto& p : conflicts) {
        bool first_kept = kept.contains(p.first);
        bool second_kept = kept.contains(p.second);
        if (first_kept && !second_kept) {
          dropped = dropped.with(p.second);
        } else if (second_kept && !first_kept) {
          dropped = dropped.with(p.first);
        } else {
          unresolved.push_back(p);
        }
      }
      if (!unresolved.empty()) {
        return Failed{FailureReason::ambiguous_provenance,
                      "cannot decide which object to keep in " +
                          pairs_to_string(universe, unresolved),
                      unresolved};
      }
      break;
    }
  }

  // NotDouble here would mean a dropped object sat in the necessity range.
  NegotiationSet repaired(raw.necessity(), raw.admissibility() - dropped);
  auto residual = disc_violations(repaired, spec);
  if (!residual.empty()) {
    std::vector<ObjectPair> pairs;
    for (const auto& v : residual) pairs.push_back(v.pair);
    return Failed{FailureReason::residual_violation,
                  "conflicts remain after dropping " + dropped.to_string() + ": " +
                      pairs_to_string(universe, pairs),
                  pairs};
  }
  return Resolved{std::move(repaired), std::move(dropped)};
}

}  // namespace negset
