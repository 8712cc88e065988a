#include "negset/session/evaluator.hpp"

#include <algorithm>

#include "negset/algebra.hpp"
#include "negset/session/printer.hpp"

namespace negset::session {

ResolutionError::ResolutionError(std::string left, std::string right, Failed failure)
    : Error(ErrorCode::ResolutionFailed, "cannot resolve (" + left + ") odot (" + right + "): " +
                                             std::string(to_string(failure.reason)) + ": " +
                                             failure.message),
      left_(std::move(left)),
      right_(std::move(right)),
      failure_(std::move(failure)) {}

namespace {

struct Operand {
  BoundValue bound;
  std::string label;
};

class Evaluator {
 public:
  Evaluator(const Environment& env, const ContradictionSpec& spec, const ResolutionPolicy& policy,
            EvalMode mode, std::vector<ResolutionStep>* trace)
      : env_(env),
        spec_(spec),
        policy_(policy),
        gated_(mode == EvalMode::gated && spec.has_relations()),
        trace_(trace) {}

  Operand eval(const Expr& e) {
    return std::visit([&](const auto& node) { return eval_node(node, e); }, e.node);
  }

 private:
  Operand lookup(const std::string& name) {
    auto it = env_.find(name);
    if (it == env_.end()) throw Error(ErrorCode::UnboundName, "unbound name '" + name + "'");
    return {it->second, name};
  }

  Operand eval_node(const AgentRef& n, const Expr&) { return lookup(n.name); }
  Operand eval_node(const BindingRef& n, const Expr&) { return lookup(n.name); }

  Operand eval_node(const Complement& n, const Expr& self) {
    Operand inner = eval(*n.operand);
    return {{complement(inner.bound.value), inner.bound.agents}, print_expr(self)};
  }

  Operand eval_node(const Difference& n, const Expr& self) {
    Operand left = eval(*n.left);
    Operand right = eval(*n.right);
    return {{difference(left.bound.value, right.bound.value), merged(left, right)}, print_expr(self)};
  }

  Operand eval_node(const Binary& n, const Expr& self) {
    Operand left = eval(*n.left);
    Operand right = eval(*n.right);
    Operand out = combine(n.op, left, right);
    out.label = print_expr(self);
    return out;
  }

  Operand eval_node(const Nary& n, const Expr& self) {
    std::vector<Operand> operands;
    operands.reserve(n.operands.size());
    for (const auto& child : n.operands) operands.push_back(eval(*child));

    Operand out = operands.front();
    if (n.op == SetOp::odot && gated_) {
      // Each binary step of the fold is repaired in turn.
      for (std::size_t i = 1; i < operands.size(); ++i) out = combine(SetOp::odot, out, operands[i]);
    } else {
      std::vector<NegotiationSet> family;
      family.reserve(operands.size());
      std::set<std::string> agents;
      for (const auto& op : operands) {
        if (n.op == SetOp::oplus) require_disc(op);
        family.push_back(op.bound.value);
        agents.insert(op.bound.agents.begin(), op.bound.agents.end());
      }
      out.bound = {apply_family(n.op, family), std::move(agents)};
    }
    out.label = print_expr(self);
    return out;
  }

  static NegotiationSet apply_family(SetOp op, std::span<const NegotiationSet> family) {
    switch (op) {
      case SetOp::odot: return odot_all(family);
      case SetOp::oplus: return oplus_all(family);
      case SetOp::union_: return union_all(family);
      case SetOp::inter: return inter_all(family);
    }
    throw Error(ErrorCode::ValidationError, "unknown operator");
  }

  static std::set<std::string> merged(const Operand& a, const Operand& b) {
    std::set<std::string> out = a.bound.agents;
    out.insert(b.bound.agents.begin(), b.bound.agents.end());
    return out;
  }

  static std::optional<std::string> single_agent(const Operand& op) {
    if (op.bound.agents.size() != 1) return std::nullopt;
    return *op.bound.agents.begin();
  }

  void require_disc(const Operand& op) const {
    if (!gated_) return;
    auto violations = disc_violations(op.bound.value, spec_);
    if (!violations.empty()) {
      throw Error(ErrorCode::InputNotDisc,
                  "operand '" + op.label + "' = " + op.bound.value.to_string() + " is not in DISC: " +
                      violation_to_string(spec_.universe(), violations.front()));
    }
  }

  Operand combine(SetOp op, const Operand& left, const Operand& right) {
    const auto& a = left.bound.value;
    const auto& b = right.bound.value;
    Operand out{{a, merged(left, right)}, left.label + " " + std::string(keyword(op)) + " " + right.label};
    switch (op) {
      case SetOp::odot:
        out.bound.value = gated_ ? resolved_odot(left, right) : odot(a, b);
        break;
      case SetOp::oplus:
        require_disc(left);
        require_disc(right);
        out.bound.value = oplus(a, b);
        break;
      case SetOp::union_:
        out.bound.value = set_union(a, b);
        break;
      case SetOp::inter:
        out.bound.value = set_inter(a, b);
        break;
    }
    return out;
  }

  NegotiationSet resolved_odot(const Operand& left, const Operand& right) {
    require_disc(left);
    require_disc(right);
    OperandNames names{single_agent(left), single_agent(right)};
    auto outcome = resolve_odot(left.bound.value, right.bound.value, spec_, policy_, names);
    if (auto* failed = std::get_if<Failed>(&outcome)) {
      throw ResolutionError(left.label, right.label, *failed);
    }
    auto& resolved = std::get<Resolved>(outcome);
    if (trace_ && !resolved.dropped.empty()) {
      trace_->push_back(ResolutionStep{left.label, right.label, odot(left.bound.value, right.bound.value),
                                       resolved.result, resolved.dropped});
    }
    return resolved.result;
  }

  const Environment& env_;
  const ContradictionSpec& spec_;
  const ResolutionPolicy& policy_;
  bool gated_;
  std::vector<ResolutionStep>* trace_;
};

}  // namespace

Environment agent_environment(const SessionScript& script) {
  Environment env;
  for (const auto& agent : script.agents) {
    env.emplace(agent.name, BoundValue{agent.value, {agent.name}});
  }
  return env;
}

BoundValue evaluate(const Expr& expr, const Environment& env, const ContradictionSpec& spec,
                    const ResolutionPolicy& policy, EvalMode mode, std::vector<ResolutionStep>* trace) {
  return Evaluator(env, spec, policy, mode, trace).eval(expr).bound;
}

NegotiationSet eval_expr(const Expr& expr, const Environment& env, const ContradictionSpec& spec,
                         const ResolutionPolicy& policy) {
  return evaluate(expr, env, spec, policy).value;
}

std::string_view to_string(StatementStatus status) noexcept {
  switch (status) {
    case StatementStatus::ok: return "ok";
    case StatementStatus::failed: return "failed";
    case StatementStatus::error: return "error";
  }
  return "unknown";
}

bool SessionReport::any_failed() const {
  return std::any_of(statements.begin(), statements.end(),
                     [](const StatementResult& r) { return r.status == StatementStatus::failed; });
}

SessionReport run_session(const SessionScript& script) {
  SessionReport report{script.universe, script.policy, {}, std::nullopt};
  Environment env = agent_environment(script);
  const auto& spec = script.contradictions;

  for (std::size_t i = 0; i < script.statements.size(); ++i) {
    const auto& st = script.statements[i];
    StatementResult result;
    result.index = i + 1;
    result.kind = st.kind;
    result.text = print_statement(st);
    result.name = st.name;

    try {
      BoundValue bound = evaluate(*st.expr, env, spec, script.policy, EvalMode::gated, &result.resolutions);
      result.value = bound.value;
      switch (st.kind) {
        case StatementKind::let:
          env.insert_or_assign(st.name, std::move(bound));
          break;
        case StatementKind::eval:
          break;
        case StatementKind::assert_disc:
          result.violations = disc_violations(*result.value, spec);
          result.disc = result.violations.empty();
          if (!*result.disc) result.status = StatementStatus::failed;
          break;
        case StatementKind::expect:
          result.expected = st.expected;
          if (!(*result.value == *st.expected)) result.status = StatementStatus::failed;
          break;
      }
    } catch (const ResolutionError& e) {
      result.status = StatementStatus::error;
      result.error_code = e.code();
      result.error_message = e.what();
      result.error_pairs = e.failure().pairs;
    } catch (const Error& e) {
      result.status = StatementStatus::error;
      result.error_code = e.code();
      result.error_message = e.what();
    }

    bool halt = result.status == StatementStatus::error;
    report.statements.push_back(std::move(result));
    if (halt) {
      report.halted_at = i + 1;
      break;
    }
  }
  return report;
}

bool CheckReport::all_disc() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CheckEntry& e) { return e.violations.empty(); });
}

CheckReport check_session(const SessionScript& script) {
  CheckReport report{script.universe, {}};
  const auto& spec = script.contradictions;
  for (const auto& agent : script.agents) {
    report.entries.push_back(CheckEntry{agent.name, true, agent.value, disc_violations(agent.value, spec)});
  }
  Environment env = agent_environment(script);
  for (const auto& st : script.statements) {
    if (st.kind != StatementKind::let) continue;
    BoundValue bound = evaluate(*st.expr, env, spec, script.policy, EvalMode::raw);
    report.entries.push_back(CheckEntry{st.name, false, bound.value, disc_violations(bound.value, spec)});
    env.insert_or_assign(st.name, std::move(bound));
  }
  return report;
}

}  // namespace negset::session
