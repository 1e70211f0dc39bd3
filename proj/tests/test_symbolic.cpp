#include <gtest/gtest.h>

#include <set>

#include "hfw/symbolic.hpp"

using namespace hfw::sym;

namespace {

SVElem e(int s, Value v) { return make_elem(s, std::move(v)); }

}  // namespace

TEST(Symbolic, ValuesAreLexOrdered) {
  EXPECT_LT((Value{0, 9}), (Value{1, -9}));
  EXPECT_EQ(add_values({1, 2}, {3, -4}), (Value{4, -2}));
  EXPECT_EQ(negate_value({1, -2}), (Value{-1, 2}));
  EXPECT_EQ(predecessor({2, 0}), (Value{2, -1}));
  EXPECT_EQ(unit_vector(3, 1), (Value{0, 1, 0}));
  EXPECT_EQ(format_value({3}), "3");
  EXPECT_EQ(e(1, {3}).to_string(), "(+,3)");
  EXPECT_EQ((-e(1, {3})).sign, -1);
}

TEST(Symbolic, SetsAreCanonical) {
  SVSet a = SVSet::tail(1, {5});
  a.insert(e(1, {4}));
  EXPECT_EQ(a, SVSet::tail(1, {4}));
  SVSet b = SVSet::tail(1, {5});
  b.insert(e(1, {7}));
  EXPECT_EQ(b, SVSet::tail(1, {5}));
  SVSet c = SVSet::of(e(-1, {2}));
  c.insert_tail(-1, {3});
  EXPECT_EQ(c, SVSet::tail(-1, {2}));
  SVSet ball = SVSet::tail(1, {0});
  ball.insert_tail(-1, {0});
  ball.insert(SVElem::zero());
  EXPECT_EQ(ball, SVSet::ball({0}));
  EXPECT_TRUE(ball.is_ball());
  // In rank 2 the predecessor of (1, 0) is (1, -1).
  SVSet d = SVSet::tail(1, {1, 0});
  d.insert(e(1, {1, -1}));
  EXPECT_EQ(d, SVSet::tail(1, {1, -1}));
}

TEST(Symbolic, MembershipAndInclusion) {
  const SVSet ball = SVSet::ball({2});
  EXPECT_TRUE(ball.contains(SVElem::zero()));
  EXPECT_TRUE(ball.contains(e(-1, {2})));
  EXPECT_TRUE(ball.contains(e(1, {100})));
  EXPECT_FALSE(ball.contains(e(1, {1})));
  EXPECT_TRUE(SVSet::tail(1, {3}).subset_of(ball));
  EXPECT_FALSE(ball.subset_of(SVSet::tail(1, {3})));
  EXPECT_TRUE(SVSet::of({e(1, {2}), SVElem::zero()}).subset_of(ball));
  EXPECT_TRUE(ball.intersects(SVSet::tail(-1, {9})));
  EXPECT_FALSE(SVSet::tail(1, {0}).intersects(SVSet::tail(-1, {0})));
  EXPECT_TRUE(SVSet::of(e(1, {5})).intersects(SVSet::tail(1, {0})));
  EXPECT_FALSE(SVSet::of(e(1, {-5})).intersects(SVSet::tail(1, {0})));
  EXPECT_FALSE(SVSet().intersects(ball));
  EXPECT_TRUE(SVSet().empty());
  EXPECT_FALSE(ball.finite());
}

TEST(Symbolic, MembersWithinWindow) {
  const auto m = SVSet::tail(1, {1}).members_within(1, 3);
  EXPECT_EQ(m.size(), 3U);
  for (const auto& x : m) EXPECT_EQ(x.sign, 1);
  const auto w = window_elements(2, 1);
  EXPECT_EQ(w.size(), 1 + 2 * 9U);
  EXPECT_TRUE(w.front().is_zero());
  EXPECT_EQ(window_values(1, 2).size(), 5U);
}

TEST(Symbolic, CharactersAreHomomorphisms) {
  for (int k : {1, 2, 3}) {
    const auto chars = all_characters(k);
    EXPECT_EQ(chars.size(), std::size_t{1} << k);
    EXPECT_TRUE(chars.front().trivial());
    EXPECT_EQ(std::set<SignCharacter>(chars.begin(), chars.end()).size(), chars.size());
    for (const auto& chi : chars) {
      for (const Value& g : window_values(k, 2)) {
        for (const Value& h : window_values(k, 1)) {
          EXPECT_EQ(chi(add_values(g, h)), chi(g) * chi(h));
        }
      }
    }
  }
  EXPECT_EQ(all_characters(1)[1].to_string(), "[-1]");
}

TEST(Symbolic, CharacterOrderingsAndCuts) {
  const SignCharacter flip{{-1}};
  const SymbolicSubset q = character_ordering(flip);
  EXPECT_TRUE(q.contains(e(1, {2})));
  EXPECT_TRUE(q.contains(e(-1, {3})));
  EXPECT_FALSE(q.contains(e(1, {3})));
  EXPECT_FALSE(q.contains(SVElem::zero()));
  EXPECT_FALSE(q.contains_tail(1, {0}));
  EXPECT_TRUE(q.meets_tail(1, {0}));
  EXPECT_TRUE(subset_of(SVSet::of(e(-1, {1})), q));
  EXPECT_FALSE(subset_of(SVSet::tail(-1, {1}), q));
  EXPECT_TRUE(meets(SVSet::tail(-1, {1}), q));

  const SymbolicSubset o = value_cut(1, false), m = value_cut(1, true);
  EXPECT_TRUE(o.contains(e(-1, {0, -5})));
  EXPECT_FALSE(m.contains(e(-1, {0, 5})));
  EXPECT_TRUE(m.contains(e(-1, {1, -5})));
  EXPECT_TRUE(o.contains(SVElem::zero()));
  EXPECT_TRUE(m.contains(SVElem::zero()));
  const SymbolicSubset o2 = value_cut(2, false);
  EXPECT_FALSE(o2.contains(e(1, {0, -1})));
  EXPECT_TRUE(value_cut(0, false).contains(e(1, {-9, 0})));
  EXPECT_FALSE(value_cut(0, true).contains(e(1, {9, 0})));
}

// The probe set realizes every parity pattern and every order relation
// between two values and between a value and a sum of two.
TEST(Symbolic, ProbesCoverTheCaseAnalysis) {
  for (int k : {1, 2}) {
    const auto probes = probe_values(k);
    std::set<std::vector<int>> parities;
    for (const Value& v : probes) {
      std::vector<int> par;
      for (auto c : v) par.push_back(static_cast<int>(((c % 2) + 2) % 2));
      parities.insert(par);
    }
    EXPECT_EQ(parities.size(), std::size_t{1} << k);
    bool less = false, equal = false, greater = false;
    for (const Value& a : probes) {
      for (const Value& b : probes) {
        less = less || a < b;
        equal = equal || a == b;
        greater = greater || a > b;
      }
    }
    EXPECT_TRUE(less && equal && greater);
    EXPECT_EQ(probe_elements(k).size(), 1 + 2 * probes.size());
  }
}
