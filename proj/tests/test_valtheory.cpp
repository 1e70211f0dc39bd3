#include <gtest/gtest.h>

#include "hfw/enumerate.hpp"
#include "hfw/factor.hpp"
#include "hfw/homomorphism.hpp"
#include "hfw/qfactor.hpp"
#include "hfw/valtheory.hpp"

using namespace hfw;
using namespace hfw::val;

namespace {

std::vector<FiniteHyperstructure> corpus() {
  std::vector<FiniteHyperstructure> out = {
      builtin::sign_hyperfield(),
      builtin::krasner_hyperfield(),
      builtin::prime_field(5),
      construct::factor_hyperfield(7, construct::squares_subgroup(7)),
      construct::factor_hyperfield(13, construct::SubgroupSpec::from_generators(13, {3})),
      construct::q_positives_hyperfield()};
  for (std::size_t n : {2, 3, 4}) {
    for (auto& h : construct::enumerate_hyperfields(n)) out.push_back(h);
  }
  return out;
}

}  // namespace

TEST(ValTheory, LexGroup) {
  const ValueGroup g = ValueGroup::lex(2);
  EXPECT_TRUE(g.check().empty());
  EXPECT_TRUE(g.less({0, 5}, {1, -9}));
  EXPECT_TRUE(g.less({1, -9}, {1, -8}));
  EXPECT_EQ(g.add({1, 2}, {-1, 3}), (GroupElement{0, 5}));
  EXPECT_EQ(g.negate({1, -2}), (GroupElement{-1, 2}));
  EXPECT_EQ(g.identity(), (GroupElement{0, 0}));
  EXPECT_THROW(g.add({1}, {1, 2}), std::invalid_argument);
}

TEST(ValTheory, QuotientGroupChecks) {
  const ValueGroup trivial = ValueGroup::quotient({{0}}, {{true}}, 0, {"0"});
  EXPECT_TRUE(trivial.check().empty());
  // Z/2 admits no translation-invariant total order.
  const ValueGroup z2 = ValueGroup::quotient({{0, 1}, {1, 0}}, {{true, true}, {false, true}}, 0, {"0", "1"});
  EXPECT_FALSE(z2.check().empty());
  EXPECT_THROW(ValueGroup::quotient({{0, 2}, {1, 0}}, {{true, true}, {false, true}}, 0, {"0", "1"}),
               std::invalid_argument);
}

// Finite hyperfields have torsion unit groups, so x in O forces 1/x in O and
// the only valuation hyperring is the whole carrier.
TEST(ValTheory, FiniteHyperfieldsCarryOnlyTheTrivialValuation) {
  for (const auto& h : corpus()) {
    const auto rings = enumerate_valuation_hyperrings(h);
    ASSERT_EQ(rings.size(), 1U) << h.name();
    EXPECT_EQ(rings[0], h.carrier());
    EXPECT_EQ(enumerate_valuation_hyperrings_exhaustive(h), rings);
    const Valuation v = valuation_from_hyperring(h, h.carrier());
    EXPECT_EQ(v.group.order(), 1U);
    EXPECT_TRUE(is_valuation(h, v).empty());
    EXPECT_TRUE(equivalent(h, v, trivial_valuation(h)));
  }
}

TEST(ValTheory, RoundTripsOnTheTrivialValuation) {
  for (const auto& h : corpus()) {
    const ValuationRing r = ring_from_valuation(h, trivial_valuation(h));
    EXPECT_EQ(r.o, h.carrier());
    EXPECT_EQ(r.m, HSet{h.zero()});
    const UnitsAndIdeal u = units_and_maximal_ideal(h, r.o);
    EXPECT_EQ(u.units, h.nonzero());
    EXPECT_EQ(u.maximal, r.m);
    EXPECT_TRUE(is_valuation_hyperring(h, r.o).empty());
    const auto res = residue_hyperfield(h, r.o);
    EXPECT_TRUE(find_isomorphism(res.structure, h)) << h.name();
    const LocalRing lr = local_ring(h, r.o);
    EXPECT_EQ(lr.ring.structure.size(), h.size());
    EXPECT_EQ(lr.maximal.size(), 1U);
  }
}

TEST(ValTheory, BogusValuationsAreRejected) {
  const auto s = builtin::sign_hyperfield();
  Valuation v = trivial_valuation(s);
  v.values[s.index_of("-1")] = GroupElement{1};
  const auto r = is_valuation(s, v);
  EXPECT_FALSE(r.empty());
  EXPECT_TRUE(r.has("V2") || r.has("neg") || r.has("unit"));
  Valuation w = trivial_valuation(s);
  w.values[s.index_of("1")] = std::nullopt;
  EXPECT_FALSE(is_valuation(s, w).empty());
  EXPECT_THROW(ring_from_valuation(s, w), std::invalid_argument);
}

TEST(ValTheory, ProperSubsetsAreNotValuationHyperrings) {
  const auto h = construct::factor_hyperfield(13, construct::SubgroupSpec::from_generators(13, {3}));
  EXPECT_FALSE(is_valuation_hyperring(h, HSet{h.zero()}).empty());
  EXPECT_FALSE(is_valuation_hyperring(h, HSet{h.zero(), h.one_or_throw()}).empty());
  EXPECT_THROW(units_and_maximal_ideal(h, HSet{h.zero()}), std::invalid_argument);
}

TEST(ValTheory, MultiplicativeSubgroups) {
  // F_13^x / <3> is cyclic of order 4: subgroups of orders 1, 2, 4.
  const auto h = construct::factor_hyperfield(13, construct::SubgroupSpec::from_generators(13, {3}));
  const auto subs = multiplicative_subgroups(h);
  ASSERT_EQ(subs.size(), 3U);
  EXPECT_EQ(subs.front(), HSet{h.one_or_throw()});
  EXPECT_EQ(subs.back(), h.nonzero());
  EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
}
