#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negset/consistency.hpp"

namespace negset::oracle {

enum class LawId {
  idempotence_odot,
  idempotence_oplus,
  commutativity_odot,
  commutativity_oplus,
  associativity_odot,
  associativity_oplus,
  absorption_oplus_odot,
  absorption_odot_oplus,
  distributivity_oplus_over_odot,
  distributivity_odot_over_oplus,
  bounds_upper,
  bounds_lower,
  demorgan_weak_1,
  demorgan_weak_2,
  demorgan_weak_3,
  demorgan_weak_4,
  fold_agreement_odot,
  fold_agreement_oplus,
  identity_lemmas,
  point_lemmas,
  disc_closure_oplus,
  disc_odot_weak_partial,
  complement_involution,
};

enum class Expectation { holds, refuted };

struct LawInfo {
  LawId id;
  std::string_view name;
  /// Number of negotiation sets in one instance.
  std::size_t arity;
  Expectation expected;
  std::size_t default_size;
  /// Largest universe accepted without an explicit override.
  std::size_t size_cap;
  /// Instances range over contradiction specs as well as sets.
  bool uses_contradictions;
  std::string_view statement;
};

std::span<const LawInfo> law_catalog();
const LawInfo& law_info(LawId id);
std::string_view to_string(LawId id);
/// Throws Error(UnknownLaw).
LawId parse_law(std::string_view name);

/// Evaluates one instance of a law; true when the instance satisfies it.
///
/// Family laws (bounds, De Morgan, fold) read the tuple as a sequence and
/// test every prefix family; for the bounds laws the last element is the
/// bounding set. The point lemmas expect two distinct point sets x_1, y_1.
/// DISC laws need `spec` and hold vacuously when an operand is outside DISC.
bool law_holds_on(LawId id, std::span<const NegotiationSet> args,
                  const ContradictionSpec* spec = nullptr);

struct Counterexample {
  std::vector<NegotiationSet> args;
  std::optional<ContradictionSpec> spec;
};

/// `A=[{a},{a}] B=[{b},{b}]`, followed by the relations when present.
std::string describe(const Counterexample& counterexample);

enum class Verdict { holds_everywhere, counterexamples };

std::string_view to_string(Verdict verdict) noexcept;
std::string_view to_string(Expectation expectation) noexcept;

struct LawReport {
  LawId law;
  std::size_t universe_size = 0;
  std::uint64_t tuples_checked = 0;
  /// Contradiction specs swept; 0 for laws that do not use them.
  std::uint64_t specs_checked = 0;
  /// Total violations found, including those beyond the reporting limit.
  std::uint64_t violation_count = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::duration<double, std::milli> elapsed{};

  Verdict verdict() const noexcept {
    return violation_count == 0 ? Verdict::holds_everywhere : Verdict::counterexamples;
  }
  bool matches_expectation() const noexcept;
};

struct CheckOptions {
  std::size_t limit = 5;
  bool unsafe_size = false;
  /// For DISC laws: sweep only this spec instead of every labeling.
  std::optional<ContradictionSpec> spec;
};

/// Exhaustive sweep of a law over the universe {a, b, ...} of size `size`.
/// Throws Error(UniverseTooLarge) past the law's cap unless overridden.
LawReport check_law(LawId id, std::size_t size, const CheckOptions& options = {});

}  // namespace negset::oracle
