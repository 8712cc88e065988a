#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "negset/consistency.hpp"
#include "negset/error.hpp"
#include "negset/session/ast.hpp"

namespace negset::session {

/// A named value together with the agents whose declarations it was built from.
struct BoundValue {
  NegotiationSet value;
  std::set<std::string> agents;
};

using Environment = std::map<std::string, BoundValue, std::less<>>;

/// One ⊙ step that needed repair.
struct ResolutionStep {
  std::string left;   // printed operand expressions
  std::string right;
  NegotiationSet raw;     // plain A ⊙ B
  NegotiationSet result;  // after drops
  FiniteSet dropped;
};

/// Raised when a ⊙ step cannot be repaired under the session policy.
class ResolutionError : public Error {
 public:
  ResolutionError(std::string left, std::string right, Failed failure);

  const Failed& failure() const noexcept { return failure_; }
  const std::string& left() const noexcept { return left_; }
  const std::string& right() const noexcept { return right_; }

 private:
  std::string left_;
  std::string right_;
  Failed failure_;
};

enum class EvalMode {
  /// ⊙ and ⊕ operands must be in DISC and every ⊙ step is routed through
  /// resolve_odot, whenever the session declares contradiction relations.
  gated,
  /// Plain algebra, no DISC preconditions and no repairs.
  raw,
};

/// Agents are seeded into the environment with themselves as sole contributor.
Environment agent_environment(const SessionScript& script);

/// Evaluates bottom-up. Throws Error(UnboundName), Error(InputNotDisc) and
/// ResolutionError. Repaired ⊙ steps are appended to `trace` when given.
BoundValue evaluate(const Expr& expr, const Environment& env, const ContradictionSpec& spec,
                    const ResolutionPolicy& policy, EvalMode mode = EvalMode::gated,
                    std::vector<ResolutionStep>* trace = nullptr);

NegotiationSet eval_expr(const Expr& expr, const Environment& env, const ContradictionSpec& spec,
                         const ResolutionPolicy& policy);

enum class StatementStatus { ok, failed, error };

std::string_view to_string(StatementStatus status) noexcept;

struct StatementResult {
  std::size_t index = 0;  // 1-based position among statements
  StatementKind kind = StatementKind::eval;
  std::string text;       // canonical statement text
  std::string name;       // `let` only
  StatementStatus status = StatementStatus::ok;
  std::optional<NegotiationSet> value;
  std::optional<NegotiationSet> expected;
  std::optional<bool> disc;  // `assert_disc` only
  std::vector<DiscViolation> violations;
  std::vector<ResolutionStep> resolutions;

  // Set when status == error.
  std::optional<ErrorCode> error_code;
  std::string error_message;
  std::vector<ObjectPair> error_pairs;
};

struct SessionReport {
  UniversePtr universe;
  ResolutionPolicy policy = ResolutionPolicy::strict();
  std::vector<StatementResult> statements;
  /// 1-based index of the statement that stopped evaluation.
  std::optional<std::size_t> halted_at;

  bool any_failed() const;
};

/// Runs statements in order. Failed expectations and DISC assertions are
/// recorded and execution continues; evaluation errors halt the run.
SessionReport run_session(const SessionScript& script);

/// DISC verdict of one named set, for the diagnostic check mode.
struct CheckEntry {
  std::string name;
  bool is_agent = true;
  NegotiationSet value;
  std::vector<DiscViolation> violations;
};

struct CheckReport {
  UniversePtr universe;
  std::vector<CheckEntry> entries;

  bool all_disc() const;
};

/// Checks every agent and every `let` binding against the declared relations.
/// Bindings are evaluated in raw mode so unrepaired ⊙ results stay visible.
CheckReport check_session(const SessionScript& script);

}  // namespace negset::session
