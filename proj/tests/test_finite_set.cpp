#include <gtest/gtest.h>

#include <set>

#include "negset/error.hpp"
#include "negset/finite_set.hpp"
#include "negset/negotiation_set.hpp"
#include "negset/universe.hpp"

using namespace negset;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Universe, RejectsEmptyAndDuplicates) {
  EXPECT_EQ(code_of([] { make_universe({}); }), ErrorCode::EmptyUniverse);
  EXPECT_EQ(code_of([] { make_universe({"a", "b", "a"}); }), ErrorCode::DuplicateName);
  EXPECT_EQ(code_of([] { make_universe({"a b"}); }), ErrorCode::InvalidName);
  EXPECT_EQ(code_of([] { make_universe({""}); }), ErrorCode::InvalidName);
}

TEST(Universe, IndexLookup) {
  auto u = make_universe({"x", "y", "z"});
  EXPECT_EQ(u->size(), 3u);
  EXPECT_EQ(u->index_of("y"), 1u);
  EXPECT_FALSE(u->index_of("w"));
  EXPECT_EQ(code_of([&] { u->require_index("w"); }), ErrorCode::UnknownObject);
  EXPECT_EQ(u->name(2), "z");
}

TEST(Universe, LetterNamesAreDistinctPastTheAlphabet) {
  auto u = letter_universe(40);
  std::set<std::string> names(u->names().begin(), u->names().end());
  EXPECT_EQ(names.size(), 40u);
  EXPECT_EQ(u->name(0), "a");
  EXPECT_EQ(u->name(25), "z");
}

TEST(Universe, SameUniverseComparesContent) {
  auto u = make_universe({"a", "b"});
  auto v = make_universe({"a", "b"});
  auto w = make_universe({"b", "a"});
  EXPECT_TRUE(same_universe(u, v));
  EXPECT_FALSE(same_universe(u, w));
  EXPECT_EQ(code_of([&] { require_same_universe(u, w); }), ErrorCode::UniverseMismatch);
}

TEST(FiniteSet, BasicMembership) {
  auto u = make_universe({"a", "b", "c", "d"});
  auto s = FiniteSet::from_names(u, {"d", "b"});
  EXPECT_TRUE(s.contains("b"));
  EXPECT_FALSE(s.contains("a"));
  EXPECT_EQ(s.count(), 2u);
  EXPECT_EQ(s.to_string(), "{b,d}");
  EXPECT_EQ(FiniteSet(u).to_string(), "{}");
  EXPECT_EQ(FiniteSet::full(u).count(), 4u);
  EXPECT_EQ(code_of([&] { FiniteSet::from_names(u, {"q"}); }), ErrorCode::UnknownObject);
}

TEST(FiniteSet, AlgebraMatchesStdSet) {
  auto u = letter_universe(6);
  for (std::uint64_t x = 0; x < 64; x += 5) {
    for (std::uint64_t y = 0; y < 64; y += 3) {
      auto a = FiniteSet::from_mask(u, x);
      auto b = FiniteSet::from_mask(u, y);
      EXPECT_EQ(a | b, FiniteSet::from_mask(u, x | y));
      EXPECT_EQ(a & b, FiniteSet::from_mask(u, x & y));
      EXPECT_EQ(a - b, FiniteSet::from_mask(u, x & ~y));
      EXPECT_EQ(a.complement(), FiniteSet::from_mask(u, ~x & 63));
      EXPECT_EQ(a.is_subset_of(b), (x & ~y) == 0);
    }
  }
}

TEST(FiniteSet, WideUniverseUsesAllWords) {
  auto u = letter_universe(150);
  auto s = FiniteSet(u).with(0).with(64).with(149);
  EXPECT_EQ(s.count(), 3u);
  EXPECT_EQ(s.members(), (std::vector<std::size_t>{0, 64, 149}));
  auto c = s.complement();
  EXPECT_EQ(c.count(), 147u);
  EXPECT_FALSE(c.contains(64));
  EXPECT_TRUE((s | c) == FiniteSet::full(u));
  EXPECT_TRUE((s & c).empty());
  EXPECT_TRUE(s.without(64).is_subset_of(s));
  EXPECT_FALSE(s.is_subset_of(s.without(149)));
}

TEST(FiniteSet, MixingUniversesFails) {
  auto a = FiniteSet::full(make_universe({"a"}));
  auto b = FiniteSet::full(make_universe({"b"}));
  EXPECT_EQ(code_of([&] { (void)(a | b); }), ErrorCode::UniverseMismatch);
}

TEST(NegotiationSet, RequiresNecessityInsideAdmissibility) {
  auto u = make_universe({"a", "b"});
  EXPECT_EQ(code_of([&] { make_negset(u, {"a"}, {}); }), ErrorCode::NotDouble);
  auto s = make_negset(u, {"a"}, {"a", "b"});
  EXPECT_EQ(s.to_string(), "[{a},{a,b}]");
  EXPECT_EQ(make_negset(u, {}, {}).to_string(), "[{},{}]");
}
