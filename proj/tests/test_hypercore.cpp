#include <gtest/gtest.h>

#include "hfw/axioms.hpp"
#include "hfw/factor.hpp"
#include "hfw/homomorphism.hpp"
#include "hfw/qfactor.hpp"
#include "hfw/structure.hpp"

using namespace hfw;

namespace {

std::vector<FiniteHyperstructure> corpus() {
  return {builtin::sign_hyperfield(),
          builtin::krasner_hyperfield(),
          builtin::prime_field(2),
          builtin::prime_field(3),
          builtin::prime_field(5),
          construct::factor_hyperfield(5, construct::squares_subgroup(5)),
          construct::factor_hyperfield(7, construct::squares_subgroup(7)),
          construct::factor_hyperfield(13, construct::squares_subgroup(13)),
          construct::q_positives_hyperfield()};
}

// Direct transcription of the hyperfield axioms, written independently of
// the library checkers and used as their oracle.
bool naive_is_hyperfield(const FiniteHyperstructure& h) {
  const std::size_t n = h.size();
  auto sum = [&](const HSet& a, Element z) {
    HSet out;
    for (Element x : a) out |= h.add(x, z);
    return out;
  };
  for (Element x = 0; x < n; ++x) {
    if (h.add(x, h.zero()) != HSet{x}) return false;
    for (Element y = 0; y < n; ++y) {
      const HSet& xy = h.add(x, y);
      if (xy != h.add(y, x)) return false;
      if (xy.contains(h.zero()) != (y == h.neg(x))) return false;
      for (Element z : xy) {
        if (!h.add(z, h.neg(x)).contains(y)) return false;
      }
      if (h.mul(x, y) != h.mul(y, x)) return false;
      for (Element z = 0; z < n; ++z) {
        HSet right;
        for (Element w : h.add(y, z)) right |= h.add(x, w);
        if (sum(xy, z) != right) return false;
        if (h.mul(h.mul(x, y), z) != h.mul(x, h.mul(y, z))) return false;
        HSet distributed;
        for (Element w : xy) distributed.insert(h.mul(z, w));
        if (distributed != h.add(h.mul(z, x), h.mul(z, y))) return false;
      }
    }
  }
  const Element one = h.one_or_throw();
  if (one == h.zero()) return false;
  for (Element x = 0; x < n; ++x) {
    if (h.mul(x, one) != x || h.mul(x, h.zero()) != h.zero()) return false;
    if (x == h.zero()) continue;
    bool invertible = false;
    for (Element y = 0; y < n; ++y) invertible = invertible || h.mul(x, y) == one;
    if (!invertible) return false;
  }
  return true;
}

}  // namespace

TEST(Hypercore, BuiltinsAreHyperfields) {
  for (const auto& h : corpus()) {
    EXPECT_TRUE(check_canonical_hypergroup(h).empty()) << h.name();
    EXPECT_TRUE(check_hyperring(h).empty()) << h.name() << check_hyperring(h).summary();
    EXPECT_TRUE(check_hyperfield(h).empty()) << h.name();
    EXPECT_TRUE(naive_is_hyperfield(h)) << h.name();
  }
}

TEST(Hypercore, SignHyperfieldTable) {
  const auto s = builtin::sign_hyperfield();
  const Element zero = s.index_of("0"), one = s.index_of("1"), m = s.index_of("-1");
  EXPECT_EQ(s.add(one, one), HSet{one});
  EXPECT_EQ(s.add(m, m), HSet{m});
  EXPECT_EQ(s.add(one, m), (HSet{zero, one, m}));
  EXPECT_EQ(s.mul(m, m), one);
}

TEST(Hypercore, KrasnerTable) {
  const auto k = builtin::krasner_hyperfield();
  const Element zero = k.zero(), one = k.one_or_throw();
  EXPECT_EQ(k.add(one, one), (HSet{zero, one}));
  EXPECT_EQ(k.neg(one), one);
}

// Single-cell changes of the addition table. The checkers agree with the
// naive oracle on every mutant; the only survivors turn one two-element
// hyperfield into the other (Krasner 1 + 1 = {0} is F_2 and back).
TEST(Hypercore, SingleCellMutations) {
  std::size_t survivors = 0;
  for (const auto& h : corpus()) {
    if (h.size() > 4) continue;
    std::size_t mutants = 0;
    for (Element x = 0; x < h.size(); ++x) {
      for (Element y = 0; y < h.size(); ++y) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << h.size()); ++mask) {
          const HSet value = HSet::from_mask(mask);
          if (value == h.add(x, y)) continue;
          const auto m = h.with_add(x, y, value);
          ++mutants;
          const bool rejected = !check_hyperfield(m).empty();
          EXPECT_EQ(rejected, !naive_is_hyperfield(m)) << h.name();
          if (rejected) continue;
          ++survivors;
          EXPECT_EQ(h.size(), 2U) << h.name() << " cell " << x << "," << y << " -> " << h.format(value);
          const bool other = h.name() == "F2" ? find_isomorphism(m, builtin::krasner_hyperfield()).has_value()
                                              : find_isomorphism(m, builtin::prime_field(2)).has_value();
          EXPECT_TRUE(other) << h.name();
        }
      }
    }
    EXPECT_GT(mutants, 0U);
  }
  EXPECT_EQ(survivors, 2U);
}

TEST(Hypercore, MultiplicationMutationsAreRejected) {
  for (const auto& h : corpus()) {
    for (Element x = 0; x < h.size(); ++x) {
      for (Element y = 0; y < h.size(); ++y) {
        for (Element v = 0; v < h.size(); ++v) {
          if (v == h.mul(x, y)) continue;
          EXPECT_FALSE(check_hyperfield(h.with_mul(x, y, v)).empty()) << h.name();
        }
      }
    }
  }
}

TEST(Hypercore, ReportNamesTheBrokenAxiom) {
  const auto s = builtin::sign_hyperfield();
  const Element one = s.index_of("1"), m = s.index_of("-1");
  // 1 + (-1) without 0 breaks the unique-negative axiom.
  const auto broken = s.with_add(one, m, HSet{one, m}).with_add(m, one, HSet{one, m});
  const auto r = check_canonical_hypergroup(broken);
  EXPECT_TRUE(r.has("H3"));
  EXPECT_FALSE(r.has("H2"));
}

TEST(Hypercore, DoubleDistributivity) {
  for (const auto& h : corpus()) {
    EXPECT_TRUE(check_double_distributivity(h).inclusion_ok) << h.name();
  }
  EXPECT_TRUE(check_double_distributivity(builtin::sign_hyperfield()).equality_failures.empty());
  EXPECT_TRUE(check_double_distributivity(builtin::prime_field(5)).equality_failures.empty());
}

TEST(Hypercore, IdentityAndIsomorphisms) {
  for (const auto& h : corpus()) {
    EXPECT_TRUE(check_homomorphism(identity_map(h), true).empty());
    EXPECT_TRUE(kernel(identity_map(h)) == HSet{h.zero()});
  }
  // Q modulo positives is the sign hyperfield; F_p modulo all units is Krasner.
  EXPECT_TRUE(find_isomorphism(construct::q_positives_hyperfield(), builtin::sign_hyperfield()));
  EXPECT_TRUE(find_isomorphism(
      construct::factor_hyperfield(7, construct::SubgroupSpec::from_generators(7, {3})),
      builtin::krasner_hyperfield()));
  EXPECT_FALSE(find_isomorphism(builtin::prime_field(3), builtin::sign_hyperfield()));
}

TEST(Hypercore, IsomorphismsAreStrictHomomorphisms) {
  const auto a = construct::q_positives_hyperfield();
  const auto b = builtin::sign_hyperfield();
  const auto map = find_isomorphism(a, b);
  ASSERT_TRUE(map);
  EXPECT_TRUE(check_homomorphism({a, b, *map}, true).empty());
}

TEST(Hypercore, HomomorphismMutationIsCaught) {
  const auto s = builtin::sign_hyperfield();
  HomomorphismSpec phi = identity_map(s);
  std::swap(phi.map[s.index_of("1")], phi.map[s.index_of("-1")]);
  EXPECT_FALSE(check_homomorphism(phi, false).empty());
}

TEST(Hypercore, Subhyperrings) {
  const auto s = builtin::sign_hyperfield();
  const HSet zero_one{s.zero(), s.index_of("1")};
  // {0, 1} is not closed under negation.
  EXPECT_FALSE(induced_subhyperring(s, zero_one));
  const auto whole = induced_subhyperring(s, s.carrier());
  ASSERT_TRUE(whole);
  EXPECT_TRUE(whole->strict);
  EXPECT_TRUE(is_strict_subset(s, s.carrier()));
}

TEST(Hypercore, OutOfCarrierElementsThrow) {
  const auto s = builtin::sign_hyperfield();
  EXPECT_THROW(s.add(0, 7), DomainError);
  EXPECT_THROW(s.index_of("2"), DomainError);
  EXPECT_THROW(builtin::prime_field(4), std::invalid_argument);
}
