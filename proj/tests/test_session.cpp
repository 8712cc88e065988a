#include <gtest/gtest.h>

#include <json.hpp>

#include "corpus.hpp"
#include "negset/session/evaluator.hpp"
#include "negset/session/lexer.hpp"
#include "negset/session/parser.hpp"
#include "negset/session/printer.hpp"
#include "negset/session/report.hpp"

using namespace negset;
using namespace negset::session;

namespace {

const char* kTrip = R"(universe a b c d e f g h i k l
agent A = [{a d} {a d f g h}]
agent B = [{a b d} {a b d f i l}]
agent C = [{a h} {a d h k}]
let S1 = (A odot B) odot C
let S2 = (A oplus B) oplus C
expect S1 = [{a} {a b d f g h i k l}]
)";

SessionError parse_error(const std::string& text) {
  try {
    parse_session(text);
  } catch (const SessionError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return SessionError(ErrorCode::ParseError, 0, 0, "");
}

}  // namespace

TEST(Lexer, TokensCarryPositions) {
  auto tokens = tokenize("universe a b # note\n  agent X = [{a}, {}]");
  ASSERT_GE(tokens.size(), 5u);
  EXPECT_EQ(tokens[0].text, "universe");
  EXPECT_EQ(tokens[3].kind, TokenKind::newline);
  EXPECT_EQ(tokens[4].text, "agent");
  EXPECT_EQ(tokens[4].line, 2);
  EXPECT_EQ(tokens[4].column, 3);
  EXPECT_EQ(tokens.back().kind, TokenKind::end);
  EXPECT_EQ(tokens[tokens.size() - 2].kind, TokenKind::newline);
}

TEST(Parser, TripScriptShape) {
  auto script = parse_session(kTrip);
  EXPECT_EQ(script.universe->size(), 11u);
  EXPECT_EQ(script.agents.size(), 3u);
  EXPECT_EQ(script.statements.size(), 3u);
  EXPECT_EQ(script.statements[0].kind, StatementKind::let);
  EXPECT_EQ(script.statements[0].name, "S1");
  EXPECT_EQ(script.find_agent("B")->value.to_string(), "[{a,b,d},{a,b,d,f,i,l}]");
  EXPECT_EQ(script.policy, ResolutionPolicy::strict());
}

TEST(Parser, FlatPrecedenceAssociatesLeft) {
  auto script = parse_session("universe a\nagent A = [{} {a}]\nagent B = [{a} {a}]\neval A oplus B odot A\n");
  const auto& e = *script.statements[0].expr;
  const auto* top = std::get_if<Binary>(&e.node);
  ASSERT_NE(top, nullptr);
  EXPECT_EQ(top->op, SetOp::odot);
  ASSERT_NE(std::get_if<Binary>(&top->left->node), nullptr);
  EXPECT_EQ(std::get<Binary>(top->left->node).op, SetOp::oplus);
}

TEST(Parser, PrefixNotBindsTighterThanInfix) {
  auto script = parse_session("universe a\nagent A = [{} {a}]\neval not A odot A\n");
  const auto* top = std::get_if<Binary>(&script.statements[0].expr->node);
  ASSERT_NE(top, nullptr);
  EXPECT_NE(std::get_if<Complement>(&top->left->node), nullptr);
}

TEST(Parser, NecessityOutsideAdmissibilityIsInvalid) {
  auto e = parse_error("universe a\nagent A = [{a} {}]");
  EXPECT_EQ(e.code(), ErrorCode::ValidationError);
  EXPECT_EQ(e.line(), 2);
}

TEST(Parser, AgentBeforeUniverseIsInvalid) {
  auto e = parse_error("agent A = [{a} {a}]\nuniverse a");
  EXPECT_EQ(e.code(), ErrorCode::ValidationError);
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 1);
}

TEST(Parser, MessageCarriesPosition) {
  auto e = parse_error("universe a\nagent A = [{a} {a}]\neval A odot Q");
  EXPECT_STREQ(e.what(), "line 3, column 13: unknown name 'Q'");
  EXPECT_EQ(e.detail(), "unknown name 'Q'");
}

TEST(Parser, MalformedCorpusReportsExpectedPositions) {
  auto expected = corpus::malformed_positions();
  auto files = corpus::files("malformed");
  ASSERT_GE(files.size(), 15u);
  for (const auto& path : files) {
    auto name = path.filename().string();
    ASSERT_TRUE(expected.count(name)) << name;
    auto e = parse_error(corpus::slurp(path));
    EXPECT_EQ(e.line(), expected[name].line) << name;
    EXPECT_EQ(e.column(), expected[name].column) << name;
    EXPECT_TRUE(e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError) << name;
  }
}

TEST(Printer, LiteralAndExpression) {
  auto script = parse_session(kTrip);
  EXPECT_EQ(print_literal(script.agents[0].value), "[{a d} {a d f g h}]");
  EXPECT_EQ(print_statement(script.statements[0]), "let S1 = A odot B odot C");
  auto nested = parse_session("universe a\nagent A = [{} {a}]\neval A odot (A oplus not (A minus A))\n");
  EXPECT_EQ(print_statement(nested.statements[0]), "eval A odot (A oplus not (A minus A))");
}

TEST(Printer, RoundTripOverSessionCorpus) {
  auto files = corpus::files("sessions");
  ASSERT_GE(files.size(), 20u);
  for (const auto& path : files) {
    auto first = parse_session(corpus::slurp(path));
    auto printed = print_script(first);
    auto second = parse_session(printed);
    EXPECT_TRUE(first == second) << path.filename() << "\n" << printed;
    EXPECT_EQ(print_script(second), printed) << path.filename();
  }
}

TEST(Evaluator, TripValues) {
  auto report = run_session(parse_session(kTrip));
  ASSERT_EQ(report.statements.size(), 3u);
  EXPECT_EQ(report.statements[0].value->to_string(), "[{a},{a,b,d,f,g,h,i,k,l}]");
  EXPECT_EQ(report.statements[1].value->to_string(), "[{a,d},{a,d}]");
  EXPECT_EQ(report.statements[2].status, StatementStatus::ok);
  EXPECT_FALSE(report.any_failed());
  EXPECT_FALSE(report.halted_at);
}

TEST(Evaluator, StrictConflictHaltsWithPair) {
  auto script = parse_session("universe a b\nstrong a b\nagent A = [{a} {a}]\nagent B = [{b} {b}]\n"
                              "expect A oplus B = [{} {}]\neval A odot B\neval A\n");
  auto report = run_session(script);
  EXPECT_EQ(report.halted_at, 2u);
  ASSERT_EQ(report.statements.size(), 2u);
  EXPECT_EQ(report.statements[1].status, StatementStatus::error);
  EXPECT_EQ(report.statements[1].error_code, ErrorCode::ResolutionFailed);
  EXPECT_EQ(report.statements[1].error_pairs, (std::vector<ObjectPair>{{0, 1}}));
  EXPECT_NE(render_text(report).find("(a,b)"), std::string::npos);
}

TEST(Evaluator, DirectEvaluationThrowsResolutionError) {
  auto script = parse_session("universe a b\nstrong a b\nagent A = [{a} {a}]\nagent B = [{b} {b}]\neval A odot B\n");
  auto env = agent_environment(script);
  try {
    eval_expr(*script.statements[0].expr, env, script.contradictions, script.policy);
    FAIL();
  } catch (const ResolutionError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResolutionFailed);
    EXPECT_EQ(e.failure().reason, FailureReason::strict_conflict);
  }
  auto raw = evaluate(*script.statements[0].expr, env, script.contradictions, script.policy, EvalMode::raw);
  EXPECT_EQ(raw.value.to_string(), "[{},{a,b}]");
  EXPECT_EQ(raw.agents, (std::set<std::string>{"A", "B"}));
}

TEST(Evaluator, FailedExpectContinues) {
  auto script = parse_session("universe a\nagent A = [{a} {a}]\nexpect A = [{} {a}]\nassert_disc A\n");
  auto report = run_session(script);
  ASSERT_EQ(report.statements.size(), 2u);
  EXPECT_EQ(report.statements[0].status, StatementStatus::failed);
  EXPECT_EQ(report.statements[1].status, StatementStatus::ok);
  EXPECT_TRUE(report.any_failed());
  EXPECT_NE(render_text(report).find("FAIL: expected [{},{a}]"), std::string::npos);
}

TEST(Evaluator, ResolutionStepsAreTraced) {
  auto script = parse_session("universe a b\nstrong a b\ndominance a > b\npolicy dominance\n"
                              "agent A = [{a} {a}]\nagent B = [{b} {b}]\nlet R = A odot B\n");
  auto report = run_session(script);
  ASSERT_EQ(report.statements[0].resolutions.size(), 1u);
  const auto& step = report.statements[0].resolutions[0];
  EXPECT_EQ(step.raw.to_string(), "[{},{a,b}]");
  EXPECT_EQ(step.result.to_string(), "[{},{a}]");
  EXPECT_EQ(step.dropped.to_string(), "{b}");
}

TEST(Check, RawBindingsAreFlagged) {
  auto script = parse_session("universe a b\nstrong a b\nagent A = [{a} {a}]\nagent B = [{b} {b}]\nlet R = A odot B\n");
  auto report = check_session(script);
  ASSERT_EQ(report.entries.size(), 3u);
  EXPECT_TRUE(report.entries[0].violations.empty());
  EXPECT_FALSE(report.entries[2].is_agent);
  ASSERT_EQ(report.entries[2].violations.size(), 1u);
  EXPECT_EQ(report.entries[2].violations[0].pair, (ObjectPair{0, 1}));
  EXPECT_FALSE(report.all_disc());
}

TEST(Report, JsonShape) {
  auto report = run_session(parse_session(kTrip));
  auto j = nlohmann::json::parse(render_json(report));
  EXPECT_EQ(j["universe"].size(), 11u);
  EXPECT_EQ(j["policy"]["kind"], "strict");
  ASSERT_EQ(j["statements"].size(), 3u);
  const auto& s1 = j["statements"][0];
  EXPECT_EQ(s1["index"], 1);
  EXPECT_EQ(s1["kind"], "let");
  EXPECT_EQ(s1["name"], "S1");
  EXPECT_EQ(s1["value"]["necessity"], nlohmann::json::array({"a"}));
  EXPECT_EQ(s1["value"]["admissibility"],
            nlohmann::json::array({"a", "b", "d", "f", "g", "h", "i", "k", "l"}));
  EXPECT_EQ(j["statements"][2]["status"], "ok");
  EXPECT_TRUE(j["halted_at"].is_null());
}

TEST(Report, TextAndJsonCarryTheSameStatements) {
  for (const auto& path : corpus::files("sessions")) {
    auto report = run_session(parse_session(corpus::slurp(path)));
    auto text = render_text(report);
    auto j = nlohmann::json::parse(render_json(report));
    ASSERT_EQ(j["statements"].size(), report.statements.size()) << path;
    for (const auto& s : j["statements"]) {
      EXPECT_NE(text.find(s["text"].get<std::string>()), std::string::npos) << path;
    }
  }
}

TEST(Report, OutputIsDeterministic) {
  auto script = parse_session(kTrip);
  EXPECT_EQ(render_json(run_session(script)), render_json(run_session(script)));
  EXPECT_EQ(render_text(check_session(script)), render_text(check_session(script)));
}
