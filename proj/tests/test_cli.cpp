#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli/cli.hpp"
#include "corpus.hpp"

using negset::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string session(const std::string& name) { return (corpus::data_dir() / "sessions" / name).string(); }

}  // namespace

TEST(Cli, EvalExitCodesMatchScriptHeaders) {
  for (const auto& path : corpus::files("sessions")) {
    auto expected = corpus::expected_exits(path);
    ASSERT_GE(expected.eval, 0) << path;
    EXPECT_EQ(run({"eval", path.string()}).code, expected.eval) << path.filename();
    EXPECT_EQ(run({"check", path.string()}).code, expected.check) << path.filename();
  }
}

TEST(Cli, MalformedScriptsExitTwoWithPosition) {
  for (const auto& path : corpus::files("malformed")) {
    auto r = run({"eval", path.string()});
    EXPECT_EQ(r.code, 2) << path.filename();
    EXPECT_NE(r.err.find("line "), std::string::npos) << path.filename();
    EXPECT_NE(r.err.find("column "), std::string::npos) << path.filename();
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, TripPrintsThreeResults) {
  auto r = run({"eval", session("trip.neg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[{a},{a,b,d,f,g,h,i,k,l}]"), std::string::npos);
  EXPECT_NE(r.out.find("[3]"), std::string::npos);
  EXPECT_EQ(r.out.find("[4]"), std::string::npos);
}

TEST(Cli, StrictConflictPrintsPair) {
  auto r = run({"eval", session("disc_failure_strict.neg")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("(a,b)"), std::string::npos);
}

TEST(Cli, CheckFlagsRawBinding) {
  auto r = run({"check", "--json", session("disc_failure_check.neg")});
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["all_disc"].get<bool>());
  EXPECT_EQ(j["sets"][2]["name"], "R");
  EXPECT_EQ(j["sets"][2]["violations"][0]["pair"], nlohmann::json::array({"a", "b"}));
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(run({"eval", "/nonexistent/file.neg"}).code, 4);
  EXPECT_EQ(run({"laws", "--law", "no-such-law"}).code, 4);
  EXPECT_EQ(run({"laws"}).code, 4);
  EXPECT_EQ(run({"laws", "--law", "associativity-odot", "--size", "9"}).code, 4);
  EXPECT_EQ(run({"frobnicate"}).code, 4);
  EXPECT_EQ(run({}).code, 4);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, LawSubcommand) {
  auto holds = run({"laws", "--law", "associativity-oplus", "--size", "3"});
  EXPECT_EQ(holds.code, 0);
  EXPECT_NE(holds.out.find("holds-everywhere"), std::string::npos);
  auto refuted = run({"laws", "--law", "absorption-odot-oplus", "--size", "2", "--json"});
  EXPECT_EQ(refuted.code, 0);
  auto j = nlohmann::json::parse(refuted.out);
  EXPECT_EQ(j["laws"][0]["verdict"], "counterexamples");
  EXPECT_TRUE(j["laws"][0]["matches"].get<bool>());
  EXPECT_LE(j["laws"][0]["counterexamples"].size(), 5u);
}

TEST(Cli, FixturesSubcommand) {
  auto r = run({"fixtures", "--json"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_GE(j["fixtures"].size(), 9u);
}
