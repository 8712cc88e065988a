#include "negset/session/report.hpp"

#include <json.hpp>

namespace negset::session {

namespace {

using Json = nlohmann::ordered_json;

Json set_json(const FiniteSet& set) { return Json(set.member_names()); }

Json value_json(const NegotiationSet& value) {
  return Json{{"necessity", set_json(value.necessity())},
              {"admissibility", set_json(value.admissibility())}};
}

Json pair_json(const UniversePtr& universe, ObjectPair pair) {
  return Json::array({universe->name(pair.first), universe->name(pair.second)});
}

Json violations_json(const UniversePtr& universe, const std::vector<DiscViolation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    out.push_back(Json{{"kind", to_string(v.kind)}, {"pair", pair_json(universe, v.pair)}});
  }
  return out;
}

Json policy_json(const ResolutionPolicy& policy) {
  Json out{{"kind", to_string(policy.kind())}};
  if (policy.kind() == ResolutionPolicy::Kind::agent_priority) out["ranking"] = policy.ranking();
  return out;
}

std::string universe_line(const UniversePtr& universe) {
  std::string out = "universe";
  for (const auto& name : universe->names()) out += " " + name;
  return out;
}

std::string violations_text(const UniversePtr& universe, const std::vector<DiscViolation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += ", ";
    out += violation_to_string(universe, v);
  }
  return out;
}

std::string pairs_text(const UniversePtr& universe, const std::vector<ObjectPair>& pairs) {
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += " ";
    out += pair_to_string(universe, p);
  }
  return out;
}

std::string policy_text(const ResolutionPolicy& policy) {
  std::string out(to_string(policy.kind()));
  for (std::size_t i = 0; i < policy.ranking().size(); ++i) {
    out += (i == 0 ? " " : " > ") + policy.ranking()[i];
  }
  return out;
}

}  // namespace

std::string render_text(const SessionReport& report) {
  const auto& u = report.universe;
  std::string out = universe_line(u) + " | policy " + policy_text(report.policy) + "\n";
  for (const auto& r : report.statements) {
    std::string line = "[" + std::to_string(r.index) + "] " + r.text + " =>";
    if (r.status == StatementStatus::error) {
      line += " ERROR " + std::string(to_string(*r.error_code)) + ": " + r.error_message;
      if (!r.error_pairs.empty()) line += " [pairs " + pairs_text(u, r.error_pairs) + "]";
    } else {
      line += " " + r.value->to_string();
      switch (r.kind) {
        case StatementKind::assert_disc:
          line += *r.disc ? " DISC" : " not DISC: " + violations_text(u, r.violations);
          break;
        case StatementKind::expect:
          line += r.status == StatementStatus::ok ? " PASS"
                                                  : " FAIL: expected " + r.expected->to_string();
          break;
        default:
          break;
      }
    }
    for (const auto& step : r.resolutions) {
      line += " (resolved " + step.left + " odot " + step.right + ": " + step.raw.to_string() +
              " -> " + step.result.to_string() + ", dropped " + step.dropped.to_string() + ")";
    }
    out += line + "\n";
  }
  if (report.halted_at) out += "halted at statement " + std::to_string(*report.halted_at) + "\n";
  return out;
}

std::string render_json(const SessionReport& report) {
  const auto& u = report.universe;
  Json statements = Json::array();
  for (const auto& r : report.statements) {
    Json s{{"index", r.index},
           {"kind", keyword(r.kind)},
           {"text", r.text},
           {"status", to_string(r.status)}};
    if (r.kind == StatementKind::let) s["name"] = r.name;
    if (r.value) s["value"] = value_json(*r.value);
    if (r.expected) s["expected"] = value_json(*r.expected);
    if (r.disc) {
      s["disc"] = *r.disc;
      s["violations"] = violations_json(u, r.violations);
    }
    Json steps = Json::array();
    for (const auto& step : r.resolutions) {
      steps.push_back(Json{{"left", step.left},
                           {"right", step.right},
                           {"raw", value_json(step.raw)},
                           {"result", value_json(step.result)},
                           {"dropped", set_json(step.dropped)}});
    }
    s["resolutions"] = std::move(steps);
    if (r.status == StatementStatus::error) {
      Json pairs = Json::array();
      for (const auto& p : r.error_pairs) pairs.push_back(pair_json(u, p));
      s["error"] = Json{{"code", to_string(*r.error_code)},
                        {"message", r.error_message},
                        {"pairs", std::move(pairs)}};
    }
    statements.push_back(std::move(s));
  }
  Json doc{{"universe", Json(std::vector<std::string>(u->names().begin(), u->names().end()))},
           {"policy", policy_json(report.policy)},
           {"statements", std::move(statements)},
           {"halted_at", report.halted_at ? Json(*report.halted_at) : Json(nullptr)}};
  return doc.dump(2) + "\n";
}

std::string render_text(const CheckReport& report) {
  const auto& u = report.universe;
  std::string out = universe_line(u) + "\n";
  for (const auto& e : report.entries) {
    out += e.name + (e.is_agent ? " (agent) " : " (binding) ") + e.value.to_string();
    out += e.violations.empty() ? " DISC" : " not DISC: " + violations_text(u, e.violations);
    out += "\n";
  }
  return out;
}

std::string render_json(const CheckReport& report) {
  const auto& u = report.universe;
  Json sets = Json::array();
  for (const auto& e : report.entries) {
    sets.push_back(Json{{"name", e.name},
                        {"kind", e.is_agent ? "agent" : "binding"},
                        {"value", value_json(e.value)},
                        {"disc", e.violations.empty()},
                        {"violations", violations_json(u, e.violations)}});
  }
  Json doc{{"universe", Json(std::vector<std::string>(u->names().begin(), u->names().end()))},
           {"sets", std::move(sets)},
           {"all_disc", report.all_disc()}};
  return doc.dump(2) + "\n";
}

}  // namespace negset::session
