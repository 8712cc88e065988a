#include "cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "negset/error.hpp"
#include "negset/oracle/fixtures.hpp"
#include "negset/oracle/laws.hpp"
#include "negset/session/evaluator.hpp"
#include "negset/session/lexer.hpp"
#include "negset/session/parser.hpp"
#include "negset/session/report.hpp"

namespace negset::cli {

namespace {

using nlohmann::ordered_json;

struct Config {
  std::string path;
  bool json = false;
  std::optional<std::string> law;
  bool all = false;
  std::optional<std::size_t> size;
  std::size_t limit = 5;
  bool unsafe_size = false;
};

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::optional<session::SessionScript> load_script(const std::string& path, std::ostream& err, int& code) {
  auto text = read_file(path, err);
  if (!text) {
    code = kConfigError;
    return std::nullopt;
  }
  try {
    return session::parse_session(*text);
  } catch (const session::SessionError& e) {
    err << path << ": " << e.what() << '\n';
  } catch (const Error& e) {
    err << path << ": " << e.what() << '\n';
  }
  code = kInvalidInput;
  return std::nullopt;
}

int cmd_eval(const Config& config, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto script = load_script(config.path, err, code);
  if (!script) return code;
  auto report = session::run_session(*script);
  out << (config.json ? session::render_json(report) : session::render_text(report));
  if (report.halted_at) return kHalted;
  return report.any_failed() ? kCheckFailed : kOk;
}

int cmd_check(const Config& config, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto script = load_script(config.path, err, code);
  if (!script) return code;
  session::CheckReport report;
  try {
    report = session::check_session(*script);
  } catch (const Error& e) {
    err << config.path << ": " << e.what() << '\n';
    return kHalted;
  }
  out << (config.json ? session::render_json(report) : session::render_text(report));
  return report.all_disc() ? kOk : kCheckFailed;
}

ordered_json law_json(const oracle::LawReport& r) {
  const auto& info = oracle::law_info(r.law);
  ordered_json examples = ordered_json::array();
  for (const auto& c : r.counterexamples) {
    ordered_json args = ordered_json::array();
    for (const auto& a : c.args) args.push_back(a.to_string());
    examples.push_back({{"args", args}, {"description", oracle::describe(c)}});
  }
  return {{"law", info.name},
          {"arity", info.arity},
          {"universe_size", r.universe_size},
          {"tuples_checked", r.tuples_checked},
          {"specs_checked", r.specs_checked},
          {"violation_count", r.violation_count},
          {"verdict", oracle::to_string(r.verdict())},
          {"expected", oracle::to_string(info.expected)},
          {"matches", r.matches_expectation()},
          {"counterexamples", examples}};
}

ordered_json fixture_json(const oracle::FixtureResult& f) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : f.checks) {
    checks.push_back({{"label", c.label}, {"actual", c.actual}, {"expected", c.expected}, {"passed", c.passed()}});
  }
  ordered_json j = {{"id", f.id}, {"description", f.description}, {"passed", f.passed()}, {"checks", checks}};
  j["note"] = f.note ? ordered_json(*f.note) : ordered_json(nullptr);
  return j;
}

void fixture_text(const oracle::FixtureResult& f, std::ostream& out) {
  out << (f.passed() ? "PASS " : "FAIL ") << f.id << ": " << f.description << '\n';
  for (const auto& c : f.checks) {
    out << "  " << (c.passed() ? "ok   " : "FAIL ") << c.label << " = " << c.actual;
    if (!c.passed()) out << " (expected " << c.expected << ")";
    out << '\n';
  }
  if (f.note) out << "  note: " << *f.note << '\n';
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

void law_table(const std::vector<oracle::LawReport>& reports, std::ostream& out) {
  std::size_t width = 3;
  for (const auto& r : reports) width = std::max(width, oracle::to_string(r.law).size());
  out << pad("law", width) << "  n  " << pad("tuples", 10) << pad("violations", 12) << pad("verdict", 26)
      << pad("expected", 26) << "status\n";
  for (const auto& r : reports) {
    const auto& info = oracle::law_info(r.law);
    out << pad(info.name, width) << "  " << r.universe_size << "  " << pad(std::to_string(r.tuples_checked), 10)
        << pad(std::to_string(r.violation_count), 12) << pad(oracle::to_string(r.verdict()), 26)
        << pad(oracle::to_string(info.expected), 26) << (r.matches_expectation() ? "ok" : "MISMATCH") << '\n';
  }
  for (const auto& r : reports) {
    if (r.counterexamples.empty()) continue;
    out << "counterexamples for " << oracle::to_string(r.law) << " (" << r.counterexamples.size() << " of "
        << r.violation_count << "):\n";
    for (const auto& c : r.counterexamples) out << "  " << oracle::describe(c) << '\n';
  }
}

int cmd_laws(const Config& config, std::ostream& out, std::ostream& err) {
  if (config.all == config.law.has_value()) {
    err << "error: laws needs exactly one of --law <id> or --all\n";
    return kConfigError;
  }
  std::vector<oracle::LawId> ids;
  if (config.law) {
    try {
      ids.push_back(oracle::parse_law(*config.law));
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kConfigError;
    }
  } else {
    for (const auto& info : oracle::law_catalog()) ids.push_back(info.id);
  }

  oracle::CheckOptions options;
  options.limit = config.limit;
  options.unsafe_size = config.unsafe_size;

  std::vector<oracle::LawReport> reports;
  for (auto id : ids) {
    const auto& info = oracle::law_info(id);
    std::size_t size = config.size.value_or(info.default_size);
    // With --all an explicit size is clamped to each law's cap rather than rejected.
    if (config.all && !config.unsafe_size) size = std::min(size, info.size_cap);
    try {
      reports.push_back(oracle::check_law(id, size, options));
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kConfigError;
    }
    err << info.name << ": " << std::fixed << std::setprecision(1) << reports.back().elapsed.count() << " ms\n";
  }

  std::vector<oracle::FixtureResult> fixtures;
  if (config.all) {
    for (auto id : oracle::fixture_ids()) fixtures.push_back(oracle::verify_fixture(id));
  }

  bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.matches_expectation(); }) &&
            std::all_of(fixtures.begin(), fixtures.end(), [](const auto& f) { return f.passed(); });

  if (config.json) {
    ordered_json j;
    j["laws"] = ordered_json::array();
    for (const auto& r : reports) j["laws"].push_back(law_json(r));
    j["fixtures"] = ordered_json::array();
    for (const auto& f : fixtures) j["fixtures"].push_back(fixture_json(f));
    j["ok"] = ok;
    out << j.dump(2) << '\n';
  } else {
    law_table(reports, out);
    for (const auto& f : fixtures) fixture_text(f, out);
    if (config.all) {
      std::size_t laws_ok = std::count_if(reports.begin(), reports.end(),
                                          [](const auto& r) { return r.matches_expectation(); });
      std::size_t fixtures_ok = std::count_if(fixtures.begin(), fixtures.end(),
                                              [](const auto& f) { return f.passed(); });
      out << "summary: " << laws_ok << '/' << reports.size() << " laws as expected, " << fixtures_ok << '/'
          << fixtures.size() << " fixtures pass\n";
    }
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_fixtures(const Config& config, std::ostream& out) {
  std::vector<oracle::FixtureResult> fixtures;
  for (auto id : oracle::fixture_ids()) fixtures.push_back(oracle::verify_fixture(id));
  bool ok = std::all_of(fixtures.begin(), fixtures.end(), [](const auto& f) { return f.passed(); });
  if (config.json) {
    ordered_json j;
    j["fixtures"] = ordered_json::array();
    for (const auto& f : fixtures) j["fixtures"].push_back(fixture_json(f));
    j["ok"] = ok;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& f : fixtures) fixture_text(f, out);
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Negotiation-set algebra: session evaluation, DISC checks and law sweeps", "negset"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate a session script");
  eval->add_option("file", config.path, "Session script")->required();
  eval->add_flag("--json", config.json, "Emit JSON");

  auto* check = app.add_subcommand("check", "Report DISC membership of every agent and binding");
  check->add_option("file", config.path, "Session script")->required();
  check->add_flag("--json", config.json, "Emit JSON");

  auto* laws = app.add_subcommand("laws", "Sweep algebraic laws exhaustively");
  laws->add_option("--law", config.law, "Law id");
  laws->add_flag("--all", config.all, "Every law plus the fixture catalog");
  laws->add_option("--size", config.size, "Universe size")->check(CLI::PositiveNumber);
  laws->add_option("--limit", config.limit, "Counterexamples to print per law");
  laws->add_flag("--unsafe-size", config.unsafe_size, "Allow sizes above the default caps");
  laws->add_flag("--json", config.json, "Emit JSON");

  auto* fixtures = app.add_subcommand("fixtures", "Verify the built-in worked constructions");
  fixtures->add_flag("--json", config.json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (eval->parsed()) return cmd_eval(config, out, err);
    if (check->parsed()) return cmd_check(config, out, err);
    if (laws->parsed()) return cmd_laws(config, out, err);
    return cmd_fixtures(config, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace negset::cli
