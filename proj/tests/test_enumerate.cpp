#include <gtest/gtest.h>

#include "hfw/axioms.hpp"
#include "hfw/enumerate.hpp"
#include "hfw/homomorphism.hpp"
#include "hfw/spec_io.hpp"

using namespace hfw;

namespace {

// Independent count for a cyclic unit group of order m = n - 1: elements
// 0, g^0, ..., g^(m-1); every sum is fixed by 1 + g^j through distributivity,
// so try all choices of those sets and of -1.
std::vector<FiniteHyperstructure> brute_cyclic(std::size_t n) {
  const std::size_t m = n - 1;
  auto elem = [](std::size_t j) { return static_cast<Element>(j + 1); };
  auto times = [&](Element x, std::size_t j) -> Element {
    return x == 0 ? 0 : elem((x - 1 + j) % m);
  };
  std::vector<std::string> labels{"0"};
  for (std::size_t j = 0; j < m; ++j) labels.push_back("g" + std::to_string(j));
  std::vector<FiniteHyperstructure> found;
  const std::uint64_t choices = (std::uint64_t{1} << n) - 1;
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < m; ++j) total *= choices;
  for (std::size_t negexp = 0; negexp < m; ++negexp) {
    if ((2 * negexp) % m) continue;  // (-1)^2 = 1
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<HSet> one_plus(m);
      std::uint64_t c = code;
      for (std::size_t j = 0; j < m; ++j) {
        one_plus[j] = HSet::from_mask(c % choices + 1);
        c /= choices;
      }
      std::vector<Element> neg(n);
      std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
      std::vector<std::vector<HSet>> add(n, std::vector<HSet>(n));
      for (Element x = 0; x < n; ++x) {
        neg[x] = times(x, negexp);
        for (Element y = 0; y < n; ++y) {
          mul[x][y] = (x == 0 || y == 0) ? 0 : times(x, y - 1);
          if (x == 0) {
            add[x][y] = HSet{y};
          } else if (y == 0) {
            add[x][y] = HSet{x};
          } else {
            // g^a + g^b = g^a (1 + g^(b - a))
            const std::size_t d = (static_cast<std::size_t>(y) + m - x) % m;
            for (Element z : one_plus[d]) add[x][y].insert(times(z, x - 1));
          }
        }
      }
      FiniteHyperstructure h("cand", labels, 0, 1, neg, mul, add);
      if (!check_hyperfield(h, 1).empty()) continue;
      bool fresh = true;
      for (const auto& f : found) fresh = fresh && !find_isomorphism(f, h);
      if (fresh) found.push_back(h);
    }
  }
  return found;
}

}  // namespace

// Snapshot of isomorphism-class counts. Derived by this library's
// enumerator and cross-checked below by an independent brute force for the
// cyclic cases; not taken from the literature.
TEST(Enumerate, CountSnapshot) {
  EXPECT_EQ(construct::enumerate_hyperfields(2).size(), 2U);
  EXPECT_EQ(construct::enumerate_hyperfields(3).size(), 5U);
  EXPECT_EQ(construct::enumerate_hyperfields(4).size(), 7U);
}

TEST(Enumerate, AgreesWithBruteForce) {
  for (std::size_t n : {2, 3, 4}) {
    EXPECT_EQ(construct::enumerate_hyperfields(n).size(), brute_cyclic(n).size()) << n;
  }
}

TEST(Enumerate, OutputIsValidAndPairwiseDistinct) {
  for (std::size_t n : {2, 3, 4}) {
    const auto list = construct::enumerate_hyperfields(n);
    for (std::size_t i = 0; i < list.size(); ++i) {
      EXPECT_EQ(list[i].size(), n);
      EXPECT_TRUE(check_hyperfield(list[i]).empty()) << list[i].name();
      EXPECT_TRUE(check_double_distributivity(list[i]).inclusion_ok);
      EXPECT_EQ(construct::canonical_form(list[i]), list[i]);
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        EXPECT_FALSE(find_isomorphism(list[i], list[j])) << list[i].name() << " " << list[j].name();
      }
    }
  }
}

TEST(Enumerate, Deterministic) {
  for (std::size_t n : {2, 3, 4}) {
    const auto a = construct::enumerate_hyperfields(n);
    const auto b = construct::enumerate_hyperfields(n);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i], b[i]);
      EXPECT_EQ(a[i].name(), b[i].name());
      EXPECT_EQ(io::to_json(a[i]).dump(), io::to_json(b[i]).dump());
    }
  }
}

TEST(Enumerate, KnownMembers) {
  auto has = [](std::size_t n, const FiniteHyperstructure& h) {
    for (const auto& f : construct::enumerate_hyperfields(n)) {
      if (find_isomorphism(f, h)) return true;
    }
    return false;
  };
  EXPECT_TRUE(has(2, builtin::prime_field(2)));
  EXPECT_TRUE(has(2, builtin::krasner_hyperfield()));
  EXPECT_TRUE(has(3, builtin::sign_hyperfield()));
  EXPECT_TRUE(has(3, builtin::prime_field(3)));
  EXPECT_TRUE(has(5, builtin::prime_field(5)));
}

TEST(Enumerate, CanonicalFormIsInvariant) {
  const auto s = builtin::sign_hyperfield();
  EXPECT_TRUE(find_isomorphism(construct::canonical_form(s), s));
  EXPECT_EQ(construct::canonical_form(construct::canonical_form(s)), construct::canonical_form(s));
}

TEST(Enumerate, OrderOutOfRangeThrows) {
  EXPECT_THROW(construct::enumerate_hyperfields(1), std::invalid_argument);
  EXPECT_THROW(construct::enumerate_hyperfields(6), std::invalid_argument);
}
