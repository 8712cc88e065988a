#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "negset/negotiation_set.hpp"

namespace negset {

/// Unordered object pair, normalized so that `first < second`.
struct ObjectPair {
  std::size_t first = 0;
  std::size_t second = 0;

  static ObjectPair of(std::size_t x, std::size_t y) { return x < y ? ObjectPair{x, y} : ObjectPair{y, x}; }
  friend auto operator<=>(const ObjectPair&, const ObjectPair&) = default;
};

using NamePair = std::pair<std::string, std::string>;

/// Strong (⚡) and weak (≀) contradiction relations on the objects of a
/// universe, plus an optional strict dominance order (>) used to break
/// strong conflicts.
class ContradictionSpec {
 public:
  /// No relations at all.
  explicit ContradictionSpec(UniversePtr universe);

  /// Index-based construction; `dominance` holds ordered (greater, lesser) pairs.
  /// Throws ReflexivePair, OverlappingKinds, UnknownObject, DominanceNotStrictOrder.
  ContradictionSpec(UniversePtr universe,
                    std::span<const std::pair<std::size_t, std::size_t>> strong,
                    std::span<const std::pair<std::size_t, std::size_t>> weak,
                    std::span<const std::pair<std::size_t, std::size_t>> dominance = {});

  const UniversePtr& universe() const noexcept { return universe_; }

  bool strong(std::size_t x, std::size_t y) const noexcept;
  bool weak(std::size_t x, std::size_t y) const noexcept;
  /// x > y in the dominance order.
  bool dominates(std::size_t x, std::size_t y) const noexcept;

  /// Sorted, duplicate-free.
  const std::vector<ObjectPair>& strong_pairs() const noexcept { return strong_; }
  const std::vector<ObjectPair>& weak_pairs() const noexcept { return weak_; }
  /// Ordered (greater, lesser) pairs, sorted and duplicate-free.
  const std::vector<std::pair<std::size_t, std::size_t>>& dominance_pairs() const noexcept {
    return dominance_;
  }

  /// True when at least one strong or weak pair is declared.
  bool has_relations() const noexcept { return !strong_.empty() || !weak_.empty(); }

  friend bool operator==(const ContradictionSpec& lhs, const ContradictionSpec& rhs);

 private:
  enum class Link : unsigned char { none, strong, weak };
  Link link(std::size_t x, std::size_t y) const noexcept;

  UniversePtr universe_;
  std::vector<ObjectPair> strong_;
  std::vector<ObjectPair> weak_;
  std::vector<std::pair<std::size_t, std::size_t>> dominance_;
  std::vector<Link> links_;        // n*n, symmetric
  std::vector<bool> dominance_matrix_;  // n*n, row dominates column
};

/// Name-based factory used by the session layer.
ContradictionSpec make_contradiction_spec(const UniversePtr& universe,
                                          std::span<const NamePair> strong,
                                          std::span<const NamePair> weak,
                                          std::span<const NamePair> dominance = {});

enum class ViolationKind { strong_in_admissibility, weak_with_necessity };

std::string_view to_string(ViolationKind kind) noexcept;

struct DiscViolation {
  ViolationKind kind;
  ObjectPair pair;
  friend bool operator==(const DiscViolation&, const DiscViolation&) = default;
};

/// Every offending pair exactly once: strong pairs first, then weak ones,
/// each group in pair order. Throws Error(UniverseMismatch).
std::vector<DiscViolation> disc_violations(const NegotiationSet& a, const ContradictionSpec& spec);

/// Membership in DISC: no strong pair inside A², and no weak pair inside A²
/// that touches A¹.
bool is_disc(const NegotiationSet& a, const ContradictionSpec& spec);

/// `(a,b)` with object names.
std::string pair_to_string(const UniversePtr& universe, ObjectPair pair);
std::string violation_to_string(const UniversePtr& universe, const DiscViolation& violation);

class ResolutionPolicy {
 public:
  enum class Kind { strict, object_dominance, agent_priority, fewest_necessities };

  static ResolutionPolicy strict() { return ResolutionPolicy(Kind::strict, {}); }
  static ResolutionPolicy object_dominance() { return ResolutionPolicy(Kind::object_dominance, {}); }
  /// Highest priority first. Throws Error(ValidationError) on an empty ranking
  /// or a repeated name (a tie).
  static ResolutionPolicy agent_priority(std::vector<std::string> ranking);
  static ResolutionPolicy fewest_necessities() { return ResolutionPolicy(Kind::fewest_necessities, {}); }

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::string>& ranking() const noexcept { return ranking_; }
  /// Position in the ranking, 0 = highest priority.
  std::optional<std::size_t> rank_of(std::string_view agent) const;

  friend bool operator==(const ResolutionPolicy&, const ResolutionPolicy&) = default;

 private:
  ResolutionPolicy(Kind kind, std::vector<std::string> ranking)
      : kind_(kind), ranking_(std::move(ranking)) {}

  Kind kind_;
  std::vector<std::string> ranking_;
};

std::string_view to_string(ResolutionPolicy::Kind kind) noexcept;

/// Names of the two immediate operands of a ⊙ step, when they are known.
struct OperandNames {
  std::optional<std::string> left;
  std::optional<std::string> right;
};

struct Resolved {
  NegotiationSet result;
  FiniteSet dropped;
};

enum class FailureReason {
  strict_conflict,       // strict policy met a violation
  unordered_pair,        // dominance does not order a violating pair
  ambiguous_provenance,  // priority could not pick a side
  incomparable,          // equal necessity counts under fewest-necessities
  residual_violation,    // drops did not restore consistency
};

std::string_view to_string(FailureReason reason) noexcept;

struct Failed {
  FailureReason reason;
  std::string message;
  std::vector<ObjectPair> pairs;
};

using ResolutionOutcome = std::variant<Resolved, Failed>;

/// Computes A ⊙ B and repairs strong conflicts according to `policy`.
///
/// Both inputs must already be in DISC (Error(InputNotDisc) otherwise). When
/// the plain result is consistent it is returned untouched with nothing
/// dropped. Repairs only ever remove objects from the admissibility range;
/// the necessity range of A ⊙ B is preserved. Weak pairs are never dropped.
/// Agent-priority throws Error(UnknownAgent) when a supplied operand name is
/// missing from the ranking, and fails as ambiguous when a name is absent.
ResolutionOutcome resolve_odot(const NegotiationSet& a, const NegotiationSet& b,
                               const ContradictionSpec& spec, const ResolutionPolicy& policy,
                               const OperandNames& names = {});

}  // namespace negset
