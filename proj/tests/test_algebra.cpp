#include <gtest/gtest.h>

#include <array>

#include "negset/algebra.hpp"
#include "negset/error.hpp"
#include "reference.hpp"

using namespace negset;

namespace {

class AlgebraSweep : public ::testing::TestWithParam<unsigned> {
 protected:
  unsigned n() const { return GetParam(); }
  UniversePtr u = letter_universe(GetParam());
  std::vector<ref::Pair> all = ref::all_pairs(GetParam());
  NegotiationSet make(ref::Pair p) const { return ref::to_negset(u, p); }
};

}  // namespace

TEST_P(AlgebraSweep, BinaryOperatorsMatchReference) {
  for (auto p : all) {
    for (auto q : all) {
      auto a = make(p);
      auto b = make(q);
      ASSERT_EQ(odot(a, b), make(ref::odot(n(), {p, q})));
      ASSERT_EQ(oplus(a, b), make(ref::oplus(n(), {p, q})));
      ASSERT_EQ(set_union(a, b), make(ref::unite(n(), {p, q})));
      ASSERT_EQ(set_inter(a, b), make(ref::intersect(n(), {p, q})));
      ASSERT_EQ(difference(a, b), make(ref::difference(n(), p, q)));
      ASSERT_EQ(included(a, b), ref::subset(p.nec, q.nec) && ref::subset(p.adm, q.adm));
      ASSERT_EQ(included(a, b, InclusionMode::necessity_only), ref::subset(p.nec, q.nec));
      ASSERT_EQ(included(a, b, InclusionMode::admissibility_only), ref::subset(p.adm, q.adm));
    }
  }
}

TEST_P(AlgebraSweep, ComplementMatchesReferenceAndIsInvolutive) {
  for (auto p : all) {
    auto a = make(p);
    EXPECT_EQ(complement(a), make(ref::complement(n(), p)));
    EXPECT_EQ(complement(complement(a)), a);
  }
}

TEST_P(AlgebraSweep, FamilyOperatorsMatchReference) {
  for (auto p : all) {
    for (auto q : all) {
      for (auto r : all) {
        std::array family{make(p), make(q), make(r)};
        std::vector<ref::Pair> raw{p, q, r};
        ASSERT_EQ(odot_all(family), make(ref::odot(n(), raw)));
        ASSERT_EQ(oplus_all(family), make(ref::oplus(n(), raw)));
        ASSERT_EQ(union_all(family), make(ref::unite(n(), raw)));
        ASSERT_EQ(inter_all(family), make(ref::intersect(n(), raw)));
      }
    }
  }
}

TEST_P(AlgebraSweep, ResultsAreDoubleSets) {
  // Construction would throw otherwise; this checks oplus clips necessity.
  for (auto p : all) {
    for (auto q : all) {
      auto s = oplus(make(p), make(q));
      EXPECT_TRUE(s.necessity().is_subset_of(s.admissibility()));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, AlgebraSweep, ::testing::Values(1u, 2u, 3u));

TEST(Algebra, SingletonFamilyIsIdentity) {
  auto u = letter_universe(3);
  auto a = make_negset(u, {"a"}, {"a", "c"});
  std::array one{a};
  EXPECT_EQ(odot_all(one), a);
  EXPECT_EQ(oplus_all(one), a);
  EXPECT_EQ(union_all(one), a);
  EXPECT_EQ(inter_all(one), a);
}

TEST(Algebra, EmptyFamilyIsRejected) {
  std::vector<NegotiationSet> none;
  try {
    odot_all(none);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyFamily);
  }
}

TEST(Algebra, MismatchedUniversesAreRejected) {
  auto a = special(make_universe({"a"}), SpecialKind::full_n);
  auto b = special(make_universe({"b"}), SpecialKind::full_n);
  try {
    odot(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UniverseMismatch);
  }
}

TEST(Algebra, SpecialSets) {
  auto u = make_universe({"a", "b"});
  EXPECT_EQ(special(u, SpecialKind::empty_n).to_string(), "[{},{}]");
  EXPECT_EQ(special(u, SpecialKind::full_n).to_string(), "[{a,b},{a,b}]");
  EXPECT_EQ(special(u, SpecialKind::half_empty).to_string(), "[{},{a,b}]");
  EXPECT_EQ(special(u, SpecialKind::point_half, "b").to_string(), "[{},{b}]");
  EXPECT_EQ(special(u, SpecialKind::point_full, "a").to_string(), "[{a},{a}]");
  EXPECT_THROW(special(u, SpecialKind::point_full, "z"), Error);
}

TEST(Algebra, IdentityLemmasOverAllSetsOfFour) {
  auto u = letter_universe(4);
  auto xn = special(u, SpecialKind::full_n);
  auto en = special(u, SpecialKind::empty_n);
  auto xp = special(u, SpecialKind::half_empty);
  for (auto p : ref::all_pairs(4)) {
    auto a = ref::to_negset(u, p);
    // ⊙ with X_N keeps necessities and opens admissibility; ⊕ with ∅_N empties both.
    EXPECT_EQ(odot(a, xn), NegotiationSet(a.necessity(), FiniteSet::full(u)));
    EXPECT_EQ(oplus(a, en), en);
    EXPECT_EQ(oplus(a, xn), NegotiationSet(a.admissibility(), a.admissibility()));
    EXPECT_EQ(odot(a, en), NegotiationSet(FiniteSet(u), a.admissibility()));
    EXPECT_EQ(odot(a, xp), xp);
    EXPECT_EQ(oplus(a, xp), a);
  }
}

TEST(Algebra, PointsOfDistinctObjects) {
  auto u = letter_universe(5);
  for (std::size_t x = 0; x < 5; ++x) {
    for (std::size_t y = 0; y < 5; ++y) {
      if (x == y) continue;
      auto px = special(u, SpecialKind::point_full, u->name(x));
      auto py = special(u, SpecialKind::point_full, u->name(y));
      EXPECT_EQ(oplus(px, py), special(u, SpecialKind::empty_n));
      EXPECT_EQ(odot(px, py).admissibility().count(), 2u);
      EXPECT_TRUE(odot(px, py).necessity().empty());
    }
  }
}
