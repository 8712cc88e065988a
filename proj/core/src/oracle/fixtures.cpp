#include "negset/oracle/fixtures.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "negset/algebra.hpp"
#include "negset/consistency.hpp"
#include "negset/error.hpp"
#include "negset/oracle/laws.hpp"

namespace negset::oracle {

namespace {

constexpr std::array<std::string_view, 10> kFixtureIds = {
    "demorgan-counterexample",
    "trip-odot-chain",
    "trip-oplus-chain",
    "trip-mixed-chain",
    "distributivity-oplus-over-odot-witness",
    "distributivity-odot-over-oplus-witness",
    "absorption-odot-oplus-witness",
    "disc-failure",
    "disc-failure-resolution",
    "lemma-constants",
};

// Per-object evaluation of the two compromise operators on plain name sets.
// Shares no code with the bitset implementation it cross-checks.
struct PlainSet {
  std::set<std::string> necessity;
  std::set<std::string> admissibility;
};

PlainSet plain_odot(const std::vector<PlainSet>& family, std::span<const std::string> objects) {
  PlainSet out;
  for (const auto& x : objects) {
    bool everywhere_needed = std::all_of(family.begin(), family.end(),
                                         [&](const PlainSet& s) { return s.necessity.count(x) > 0; });
    bool somewhere_allowed = std::any_of(family.begin(), family.end(),
                                         [&](const PlainSet& s) { return s.admissibility.count(x) > 0; });
    if (everywhere_needed) out.necessity.insert(x);
    if (somewhere_allowed) out.admissibility.insert(x);
  }
  return out;
}

PlainSet plain_oplus(const std::vector<PlainSet>& family, std::span<const std::string> objects) {
  PlainSet out;
  for (const auto& x : objects) {
    bool everywhere_allowed = std::all_of(family.begin(), family.end(),
                                          [&](const PlainSet& s) { return s.admissibility.count(x) > 0; });
    bool somewhere_needed = std::any_of(family.begin(), family.end(),
                                        [&](const PlainSet& s) { return s.necessity.count(x) > 0; });
    if (everywhere_allowed) out.admissibility.insert(x);
    if (everywhere_allowed && somewhere_needed) out.necessity.insert(x);
  }
  return out;
}

std::string plain_to_string(const PlainSet& s, std::span<const std::string> objects) {
  auto part = [&](const std::set<std::string>& members) {
    std::string out = "{";
    bool first = true;
    for (const auto& x : objects) {
      if (!members.count(x)) continue;
      if (!first) out += ',';
      out += x;
      first = false;
    }
    return out + "}";
  };
  return "[" + part(s.necessity) + "," + part(s.admissibility) + "]";
}

PlainSet to_plain(const NegotiationSet& s) {
  auto n = s.necessity().member_names();
  auto a = s.admissibility().member_names();
  return {{n.begin(), n.end()}, {a.begin(), a.end()}};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

struct Builder {
  FixtureResult result;

  void check(std::string label, const std::string& actual, std::string expected) {
    result.checks.push_back({std::move(label), actual, std::move(expected)});
  }
  void check(std::string label, const NegotiationSet& actual, std::string expected) {
    check(std::move(label), actual.to_string(), std::move(expected));
  }
  void check(std::string label, bool actual, bool expected) {
    check(std::move(label), yes_no(actual), yes_no(expected));
  }
};

UniversePtr trip_universe() {
  return make_universe({"a", "b", "c", "d", "e", "f", "g", "h", "i", "k", "l"});
}

struct Trip {
  UniversePtr u = trip_universe();
  NegotiationSet a = make_negset(u, {"a", "d"}, {"a", "d", "f", "g", "h"});
  NegotiationSet b = make_negset(u, {"a", "b", "d"}, {"a", "b", "d", "f", "i", "l"});
  NegotiationSet c = make_negset(u, {"a", "h"}, {"a", "d", "h", "k"});
};

FixtureResult demorgan_counterexample() {
  Builder f;
  f.result.description = "weak De Morgan inclusions cannot be strengthened to equalities";
  auto u = make_universe({"a", "b", "c", "d", "e", "f", "g"});
  auto a = make_negset(u, {"a", "b"}, {"a", "b", "c", "d"});
  auto b = make_negset(u, {"c", "d"}, {"c", "d", "g"});
  auto not_meet = complement(odot(a, b));
  auto join_not = oplus(complement(a), complement(b));
  f.check("A odot B", odot(a, b), "[{},{a,b,c,d,g}]");
  f.check("not (A odot B)", not_meet, "[{e,f},{a,b,c,d,e,f,g}]");
  f.check("not A", complement(a), "[{e,f,g},{c,d,e,f,g}]");
  f.check("not B", complement(b), "[{a,b,e,f},{a,b,e,f,g}]");
  f.check("not A oplus not B", join_not, "[{e,f,g},{e,f,g}]");
  f.check("(not A oplus not B) <=1 not (A odot B)",
          included(join_not, not_meet, InclusionMode::necessity_only), false);
  f.check("not (A odot B) <=2 (not A oplus not B)",
          included(not_meet, join_not, InclusionMode::admissibility_only), false);
  f.check("not (A odot B) <=1 (not A oplus not B)",
          included(not_meet, join_not, InclusionMode::necessity_only), true);
  f.check("(not A oplus not B) <=2 not (A odot B)",
          included(join_not, not_meet, InclusionMode::admissibility_only), true);
  f.check("A minus B", difference(a, b), "[{a,b},{a,b}]");
  return f.result;
}

FixtureResult trip_odot_chain() {
  Builder f;
  f.result.description = "three travellers minimize necessities: (A odot B) odot C";
  Trip t;
  auto ab = odot(t.a, t.b);
  f.check("A odot B", ab, "[{a,d},{a,b,d,f,g,h,i,l}]");
  f.check("(A odot B) odot C", odot(ab, t.c), "[{a},{a,b,d,f,g,h,i,k,l}]");
  f.check("odot(A, B, C)", odot_all(std::array{t.a, t.b, t.c}), "[{a},{a,b,d,f,g,h,i,k,l}]");
  return f.result;
}

FixtureResult trip_oplus_chain() {
  Builder f;
  f.result.description = "three travellers maximize necessities: (A oplus B) oplus C";
  Trip t;
  auto objects = t.u->names();
  auto plain_ab = plain_oplus({to_plain(t.a), to_plain(t.b)}, objects);
  auto plain_abc = plain_oplus({plain_ab, to_plain(t.c)}, objects);
  auto ab = oplus(t.a, t.b);
  f.check("A oplus B", ab, "[{a,d},{a,d,f}]");
  f.check("A oplus B (per-object evaluation)", ab, plain_to_string(plain_ab, objects));
  f.check("(A oplus B) oplus C", oplus(ab, t.c), "[{a,d},{a,d}]");
  f.check("(A oplus B) oplus C (per-object evaluation)", oplus(ab, t.c), plain_to_string(plain_abc, objects));
  f.result.note =
      "published value [{a},{a,d}] for (A oplus B) oplus C disagrees with the operator definition: "
      "d is in B's necessity and in every admissibility range, so it stays necessary; "
      "the recorded value is [{a,d},{a,d}]";
  return f.result;
}

FixtureResult trip_mixed_chain() {
  Builder f;
  f.result.description = "B and C compromise with oplus, then negotiate with A using odot";
  Trip t;
  auto objects = t.u->names();
  auto plain_bc = plain_oplus({to_plain(t.b), to_plain(t.c)}, objects);
  auto plain_bca = plain_odot({plain_bc, to_plain(t.a)}, objects);
  auto bc = oplus(t.b, t.c);
  f.check("B oplus C", bc, "[{a,d},{a,d}]");
  f.check("B oplus C (per-object evaluation)", bc, plain_to_string(plain_bc, objects));
  f.check("(B oplus C) odot A", odot(bc, t.a), "[{a,d},{a,d,f,g,h}]");
  f.check("(B oplus C) odot A (per-object evaluation)", odot(bc, t.a), plain_to_string(plain_bca, objects));
  f.result.note =
      "published values [{a},{a,d}] for B oplus C and [{a},{a,d,f,g,h}] for (B oplus C) odot A "
      "disagree with the operator definition: d is in B's necessity and in both admissibility "
      "ranges; the recorded values are [{a,d},{a,d}] and [{a,d},{a,d,f,g,h}]";
  return f.result;
}

FixtureResult distributivity_oplus_over_odot() {
  Builder f;
  f.result.description = "oplus does not distribute over odot";
  auto u = make_universe({"a", "b", "c", "d", "x"});
  auto a = make_negset(u, {"x"}, {"a", "x"});
  auto b = make_negset(u, {"b"}, {"b", "d"});
  auto c = make_negset(u, {"c"}, {"c", "x"});
  f.check("B odot C", odot(b, c), "[{},{b,c,d,x}]");
  f.check("A oplus (B odot C)", oplus(a, odot(b, c)), "[{x},{x}]");
  f.check("A oplus B", oplus(a, b), "[{},{}]");
  f.check("A oplus C", oplus(a, c), "[{x},{x}]");
  f.check("(A oplus B) odot (A oplus C)", odot(oplus(a, b), oplus(a, c)), "[{},{x}]");
  f.check("law holds on witness",
          law_holds_on(LawId::distributivity_oplus_over_odot, std::array{a, b, c}), false);
  return f.result;
}

FixtureResult distributivity_odot_over_oplus() {
  Builder f;
  f.result.description = "odot does not distribute over oplus";
  auto u = make_universe({"a", "x", "b", "c"});
  auto a = make_negset(u, {"a"}, {"a"});
  auto b = make_negset(u, {"x"}, {"x", "b"});
  auto c = make_negset(u, {"x", "a"}, {"x", "a", "c"});
  f.check("A odot B", odot(a, b), "[{},{a,x,b}]");
  f.check("A odot C", odot(a, c), "[{a},{a,x,c}]");
  f.check("(A odot B) oplus (A odot C)", oplus(odot(a, b), odot(a, c)), "[{a},{a,x}]");
  f.check("B oplus C", oplus(b, c), "[{x},{x}]");
  f.check("A odot (B oplus C)", odot(a, oplus(b, c)), "[{},{a,x}]");
  f.check("law holds on witness",
          law_holds_on(LawId::distributivity_odot_over_oplus, std::array{a, b, c}), false);
  return f.result;
}

FixtureResult absorption_odot_oplus() {
  Builder f;
  f.result.description = "odot-oplus absorption fails";
  auto u = make_universe({"x", "b"});
  auto a = make_negset(u, {"x"}, {"x"});
  auto b = make_negset(u, {"b"}, {"b"});
  f.check("A oplus B", oplus(a, b), "[{},{}]");
  f.check("A odot (A oplus B)", odot(a, oplus(a, b)), "[{},{x}]");
  f.check("A odot (A oplus B) = A", odot(a, oplus(a, b)) == a, false);
  f.check("law holds on witness", law_holds_on(LawId::absorption_odot_oplus, std::array{a, b}), false);
  f.check("A oplus (A odot B) = A", oplus(a, odot(a, b)) == a, true);
  return f.result;
}

struct Conflict {
  UniversePtr u = make_universe({"a", "b"});
  ContradictionSpec spec = make_contradiction_spec(u, std::array{NamePair{"a", "b"}}, {},
                                                   std::array{NamePair{"a", "b"}});
  NegotiationSet a = make_negset(u, {"a"}, {"a"});
  NegotiationSet b = make_negset(u, {"b"}, {"b"});
};

FixtureResult disc_failure() {
  Builder f;
  f.result.description = "two consistent positions whose odot leaves DISC under a strong conflict";
  Conflict k;
  auto meet = odot(k.a, k.b);
  f.check("A in DISC", is_disc(k.a, k.spec), true);
  f.check("B in DISC", is_disc(k.b, k.spec), true);
  f.check("A odot B", meet, "[{},{a,b}]");
  f.check("A odot B in DISC", is_disc(meet, k.spec), false);
  auto violations = disc_violations(meet, k.spec);
  std::string listed;
  for (const auto& v : violations) listed += (listed.empty() ? "" : ", ") + violation_to_string(k.u, v);
  f.check("violations", listed, "strong-in-admissibility (a,b)");
  f.check("A oplus B in DISC", is_disc(oplus(k.a, k.b), k.spec), true);
  return f.result;
}

std::string outcome_string(const ResolutionOutcome& outcome) {
  if (const auto* r = std::get_if<Resolved>(&outcome)) {
    return "resolved " + r->result.to_string() + " dropped " + r->dropped.to_string();
  }
  return "failed " + std::string(to_string(std::get<Failed>(outcome).reason));
}

FixtureResult disc_failure_resolution() {
  Builder f;
  f.result.description = "conflict policies applied to the DISC failure";
  Conflict k;
  f.check("strict", outcome_string(resolve_odot(k.a, k.b, k.spec, ResolutionPolicy::strict())),
          "failed strict-conflict");
  auto dominance = resolve_odot(k.a, k.b, k.spec, ResolutionPolicy::object_dominance());
  f.check("dominance a > b", outcome_string(dominance), "resolved [{},{a}] dropped {b}");
  if (const auto* r = std::get_if<Resolved>(&dominance)) {
    f.check("dominance result in DISC", is_disc(r->result, k.spec), true);
  }
  f.check("fewest-necessities",
          outcome_string(resolve_odot(k.a, k.b, k.spec, ResolutionPolicy::fewest_necessities())),
          "failed incomparable");
  f.check("agent-priority A > B",
          outcome_string(resolve_odot(k.a, k.b, k.spec, ResolutionPolicy::agent_priority({"A", "B"}),
                                      OperandNames{"A", "B"})),
          "resolved [{},{a}] dropped {b}");
  return f.result;
}

FixtureResult lemma_constants() {
  Builder f;
  f.result.description = "special sets and negotiation points";
  auto u = make_universe({"a", "b", "c"});
  auto a = make_negset(u, {"a"}, {"a", "b"});
  auto empty_n = special(u, SpecialKind::empty_n);
  auto full_n = special(u, SpecialKind::full_n);
  auto half = special(u, SpecialKind::half_empty);
  f.check("A odot X_N", odot(a, full_n), "[{a},{a,b,c}]");
  f.check("A odot empty_N", odot(a, empty_n), "[{},{a,b}]");
  f.check("A oplus X_N", oplus(a, full_n), "[{a,b},{a,b}]");
  f.check("A oplus empty_N", oplus(a, empty_n), "[{},{}]");
  f.check("A odot X_P", odot(a, half), "[{},{a,b,c}]");
  f.check("A oplus X_P", oplus(a, half), "[{a},{a,b}]");
  auto ah = special(u, SpecialKind::point_half, "a");
  auto b1 = special(u, SpecialKind::point_full, "b");
  f.check("a_0.5 oplus b_1", oplus(ah, b1), "[{},{}]");
  f.check("a_0.5 odot b_1", odot(ah, b1), "[{},{a,b}]");
  return f.result;
}

}  // namespace

bool FixtureResult::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.passed(); });
}

std::span<const std::string_view> fixture_ids() { return kFixtureIds; }

FixtureResult verify_fixture(std::string_view id) {
  static const std::array<std::function<FixtureResult()>, kFixtureIds.size()> builders = {
      demorgan_counterexample,        trip_odot_chain,        trip_oplus_chain,
      trip_mixed_chain,               distributivity_oplus_over_odot,
      distributivity_odot_over_oplus, absorption_odot_oplus,  disc_failure,
      disc_failure_resolution,        lemma_constants,
  };
  for (std::size_t i = 0; i < kFixtureIds.size(); ++i) {
    if (kFixtureIds[i] == id) {
      FixtureResult result = builders[i]();
      result.id = std::string(id);
      return result;
    }
  }
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(id) + "'");
}

}  // namespace negset::oracle
