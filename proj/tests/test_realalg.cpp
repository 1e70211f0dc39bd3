#include <gtest/gtest.h>

#include "hfw/enumerate.hpp"
#include "hfw/factor.hpp"
#include "hfw/homomorphism.hpp"
#include "hfw/qfactor.hpp"
#include "hfw/realalg.hpp"
#include "hfw/structure.hpp"

using namespace hfw;

namespace {

std::vector<FiniteHyperstructure> corpus() {
  std::vector<FiniteHyperstructure> out = {
      builtin::sign_hyperfield(),
      builtin::krasner_hyperfield(),
      builtin::prime_field(2),
      builtin::prime_field(3),
      builtin::prime_field(5),
      construct::factor_hyperfield(5, construct::squares_subgroup(5)),
      construct::factor_hyperfield(7, construct::squares_subgroup(7)),
      construct::factor_hyperfield(13, construct::squares_subgroup(13)),
      construct::factor_hyperfield(13, construct::SubgroupSpec::from_generators(13, {3})),
      construct::q_positives_hyperfield()};
  for (std::size_t n : {2, 3, 4}) {
    for (auto& h : construct::enumerate_hyperfields(n)) out.push_back(h);
  }
  return out;
}

// Orderings straight from the definition, over all subsets.
std::vector<HSet> brute_orderings(const FiniteHyperstructure& h) {
  std::vector<HSet> out;
  const HSet nz = h.nonzero();
  const std::vector<Element> elems = nz.members();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << elems.size()); ++bits) {
    HSet p;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if ((bits >> i) & 1U) p.insert(elems[i]);
    }
    bool ok = true;
    for (Element x : nz) ok = ok && (p.contains(x) != p.contains(h.neg(x)));
    for (Element a : p) {
      for (Element b : p) ok = ok && h.add(a, b).subset_of(p) && p.contains(h.mul(a, b));
    }
    if (ok) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// I_n by repeated set addition.
HSet brute_In(const FiniteHyperstructure& h, std::size_t n) {
  HSet acc{h.one_or_throw()};
  for (std::size_t i = 1; i < n; ++i) acc = set_add(h, acc, HSet{h.one_or_throw()});
  return acc;
}

std::vector<HSet> sorted(std::vector<HSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(RealAlg, SignHyperfieldHasExactlyOneOrdering) {
  const auto s = builtin::sign_hyperfield();
  const auto orders = real::enumerate_orderings(s);
  ASSERT_EQ(orders.size(), 1U);
  EXPECT_EQ(orders[0], HSet{s.index_of("1")});
  EXPECT_TRUE(real::is_real(s).real);
  EXPECT_TRUE(real::is_archimedean(s, orders[0]));
  EXPECT_EQ(real::A_of_P(s, orders[0]), s.carrier());
  EXPECT_EQ(real::I_of_P(s, orders[0]), HSet{s.zero()});
}

TEST(RealAlg, NonRealStructures) {
  for (const auto& h : {builtin::krasner_hyperfield(), builtin::prime_field(2), builtin::prime_field(5),
                        construct::factor_hyperfield(5, construct::squares_subgroup(5)),
                        construct::factor_hyperfield(7, construct::squares_subgroup(7)),
                        construct::factor_hyperfield(13, construct::squares_subgroup(13))}) {
    const real::Realness r = real::is_real(h);
    EXPECT_FALSE(r.real) << h.name();
    EXPECT_TRUE(r.minus_one_length.has_value());
    EXPECT_TRUE(real::enumerate_orderings(h).empty());
  }
}

TEST(RealAlg, EnumerationMatchesDefinition) {
  for (const auto& h : corpus()) {
    const auto expected = brute_orderings(h);
    EXPECT_EQ(sorted(real::enumerate_orderings(h)), expected) << h.name();
    EXPECT_EQ(sorted(real::enumerate_orderings_exhaustive(h)), expected) << h.name();
    EXPECT_EQ(real::is_real(h).real, !expected.empty()) << h.name();
    for (const HSet& p : expected) EXPECT_TRUE(real::is_ordering(h, p).empty());
  }
}

TEST(RealAlg, OrderingViolationsAreNamed) {
  const auto s = builtin::sign_hyperfield();
  const Element one = s.index_of("1"), m = s.index_of("-1");
  EXPECT_TRUE(real::is_ordering(s, HSet{one, m}).has("disjoint"));
  EXPECT_TRUE(real::is_ordering(s, HSet{}).has("cover"));
  EXPECT_TRUE(real::is_ordering(s, HSet{m}).has("closure-mul"));
  EXPECT_TRUE(real::is_ordering(s, HSet{s.zero(), one}).has("zero"));
}

TEST(RealAlg, SignHomomorphismOfEachOrdering) {
  const auto sign = builtin::sign_hyperfield();
  for (const auto& h : corpus()) {
    for (const HSet& p : real::enumerate_orderings(h)) {
      const HomomorphismSpec phi = real::sign_hom(h, p);
      EXPECT_TRUE(check_homomorphism(phi, false).empty()) << h.name();
      EXPECT_EQ(kernel(phi), HSet{h.zero()});
      for (Element x : h.nonzero()) {
        EXPECT_EQ(real::signature(h, p, x), p.contains(x) ? 1 : -1);
      }
    }
  }
  EXPECT_THROW(real::sign_hom(sign, HSet{}), std::invalid_argument);
}

TEST(RealAlg, PreorderingsExtendToAllOrderings) {
  for (const auto& h : corpus()) {
    const HSet squares = real::nonzero_squares(h);
    if (!real::is_real(h).real) {
      EXPECT_FALSE(real::is_preordering(h, squares) && real::is_preordering(h, real::is_real(h).sums_of_squares));
      continue;
    }
    const HSet sums = real::is_real(h).sums_of_squares;
    EXPECT_TRUE(real::is_preordering(h, sums)) << h.name();
    EXPECT_EQ(sorted(real::maximal_preordering_extensions(h, sums, true)),
              sorted(real::enumerate_orderings(h)))
        << h.name();
    const auto one = real::maximal_preordering_extensions(h, sums, false);
    ASSERT_EQ(one.size(), 1U);
    EXPECT_TRUE(real::is_ordering(h, one[0]).empty());
  }
}

TEST(RealAlg, PreorderingViolations) {
  const auto k = builtin::krasner_hyperfield();
  EXPECT_TRUE(real::check_preordering(k, HSet{k.one_or_throw()}).has("minus-one"));
  const auto s = builtin::sign_hyperfield();
  EXPECT_TRUE(real::check_preordering(s, HSet{}).has("squares"));
  EXPECT_THROW(real::maximal_preordering_extensions(k, HSet{k.one_or_throw()}, true),
               std::invalid_argument);
}

TEST(RealAlg, InSequenceMatchesRepeatedAddition) {
  for (const auto& h : corpus()) {
    const real::InSeq seq = real::in_sequence(h);
    for (std::size_t n = 1; n <= 12; ++n) {
      EXPECT_EQ(seq.at(n), brute_In(h, n)) << h.name() << " n=" << n;
      EXPECT_EQ(real::compute_In(h, n), brute_In(h, n));
    }
  }
  EXPECT_THROW(real::compute_In(builtin::sign_hyperfield(), 0), std::invalid_argument);
}

TEST(RealAlg, HullContainsZeroAndIdealInsideHull) {
  for (const auto& h : corpus()) {
    for (const HSet& p : real::enumerate_orderings(h)) {
      const HSet a = real::A_of_P(h, p), i = real::I_of_P(h, p);
      EXPECT_TRUE(a.contains(h.zero()));
      EXPECT_TRUE(a.contains(h.one_or_throw()));
      EXPECT_TRUE(i.subset_of(a));
      EXPECT_FALSE(i.contains(h.one_or_throw()));
      // The either-reading gives a superset of the both-reading.
      EXPECT_TRUE(a.subset_of(real::A_of_P(h, p, real::PmReading::either)));
    }
  }
}
