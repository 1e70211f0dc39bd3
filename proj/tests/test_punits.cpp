#include <gtest/gtest.h>

#include <numeric>

#include "hfw/homomorphism.hpp"
#include "hfw/punits.hpp"
#include "hfw/realalg.hpp"
#include "hfw/symbolic_analysis.hpp"

using namespace hfw;
using namespace hfw::sym;
using nt::Rational;

namespace {

const Quantifier kQ{6, true};

// Positive rationals with numerator and denominator odd-to-p and at most h.
std::vector<Rational> units(std::int64_t p, std::int64_t h) {
  std::vector<Rational> out;
  for (std::int64_t n = 1; n <= h; ++n) {
    for (std::int64_t d = 1; d <= h; ++d) {
      if (n % p != 0 && d % p != 0 && std::gcd(n, d) == 1) out.emplace_back(n, d);
    }
  }
  return out;
}

std::pair<int, std::int64_t> class_of(Rational a, std::int64_t p) {
  const int s = a > 0 ? 1 : -1;
  std::int64_t n = a.numerator() < 0 ? -a.numerator() : a.numerator(), d = a.denominator(), v = 0;
  for (; n % p == 0; n /= p) ++v;
  for (; d % p == 0; d /= p) --v;
  return {s, v};
}

Rational rep(const SVElem& x, std::int64_t p) {
  Rational r(x.sign);
  const std::int64_t g = x.value[0];
  for (std::int64_t i = 0; i < (g < 0 ? -g : g); ++i) r = g < 0 ? r / p : r * p;
  return r;
}

// Whether w lies in x + y, decided by searching x t + y u over small p-units.
bool realized(const SVElem& x, const SVElem& y, const SVElem& w, std::int64_t p) {
  const auto us = units(p, 12);
  for (const Rational& t : us) {
    for (const Rational& u : us) {
      const Rational s = rep(x, p) * t + rep(y, p) * u;
      if (s.numerator() == 0) {
        if (w.is_zero()) return true;
        continue;
      }
      if (!w.is_zero() && class_of(s, p) == std::pair<int, std::int64_t>{w.sign, w.value[0]}) return true;
    }
  }
  return false;
}

}  // namespace

TEST(PUnits, SumsAgreeWithRationalSearch) {
  const PUnitHyperfield h(2);
  const auto elems = window_elements(1, 3);
  for (const SVElem& x : elems) {
    for (const SVElem& y : elems) {
      if (x.is_zero() || y.is_zero()) continue;
      const SVSet s = h.add(x, y);
      for (const SVElem& w : elems) {
        // Sums reaching below the window need no search; the search is complete
        // for the nearby values checked here.
        if (!w.is_zero() && w.value[0] > 2) continue;
        EXPECT_EQ(s.contains(w), realized(x, y, w, 2)) << x.to_string() << "+" << y.to_string() << " " << w.to_string();
      }
    }
  }
}

TEST(PUnits, AxiomsHold) { EXPECT_TRUE(check_axioms(PUnitHyperfield(2), 3).empty()); }

TEST(PUnits, InducedValuationIsWellDefined) {
  const auto c = induced_valuation_check(2, 12);
  EXPECT_TRUE(c.ok()) << c.failures.front();
  EXPECT_GT(c.subgroup_elements, 10U);
  EXPECT_EQ(punit_class(Rational(-12, 5), 2), make_elem(-1, {2}));
  EXPECT_EQ(punit_class(Rational(3, 8), 2), make_elem(1, {-3}));
}

TEST(PUnits, DistinctPositiveClassesAreIncomparable) {
  const auto ws = incomparability_witnesses(2, 6, 12);
  ASSERT_GE(ws.size(), 5U);
  for (const auto& w : ws) {
    EXPECT_NE(w.x, w.y);
    EXPECT_EQ(class_of(w.t1, 2).second, 0);
    EXPECT_EQ(class_of(w.u1, 2).second, 0);
    EXPECT_EQ(class_of(w.t2, 2).second, 0);
    EXPECT_EQ(class_of(w.u2, 2).second, 0);
    EXPECT_GT(w.t1, 0);
    EXPECT_GT(w.u2, 0);
    EXPECT_EQ(rep(w.x, 2) * w.t1 - rep(w.y, 2) * w.u1, w.value1);
    EXPECT_EQ(rep(w.y, 2) * w.u2 - rep(w.x, 2) * w.t2, w.value2);
    EXPECT_GT(w.value1, 0);
    EXPECT_GT(w.value2, 0);
  }
}

TEST(PUnits, OnlyTheSignOrdering) {
  const PUnitHyperfield h(2);
  const auto orders = enumerate_orderings(h, kQ);
  ASSERT_EQ(orders.size(), 1U);
  EXPECT_TRUE(orders[0].trivial());
  EXPECT_FALSE(is_ordering(h, character_ordering(all_characters(1)[1]), kQ).empty());
}

TEST(PUnits, HullIsEverything) {
  const PUnitHyperfield h(2);
  const auto p = character_ordering(all_characters(1).front());
  const auto c = compare_hull(h, p, whole_carrier(), only_zero(), kQ);
  EXPECT_TRUE(c.agree());
  EXPECT_GT(c.checked, 0U);
  EXPECT_FALSE(compare_hull(h, p, value_cut(1, false), value_cut(1, true), kQ).agree());
}

TEST(PUnits, ResidueHasTwoElements) {
  const PUnitHyperfield h(2);
  const SymResidue r = residue(h, kQ);
  EXPECT_EQ(r.structure.size(), 2U);
  EXPECT_TRUE(find_isomorphism(r.structure, builtin::prime_field(2)));
  EXPECT_TRUE(real::enumerate_orderings(r.structure).empty());
}

// v_2 is not compatible with the ordering: every condition fails, and each
// witness is checked against rational arithmetic.
TEST(PUnits, ValuationIsIncompatible) {
  const PUnitHyperfield h(2);
  const auto p = character_ordering(all_characters(1).front());
  const auto r = compatibility_report(h, SymValuation{1, {}}, p, kQ);
  EXPECT_TRUE(r.agree());
  EXPECT_FALSE(r.compatible());
  for (const auto& c : r.conditions) EXPECT_FALSE(c.holds) << c.detail;

  // A(P) holds an element of negative value.
  ASSERT_EQ(r.conditions[0].witness.size(), 1U);
  EXPECT_LT(r.conditions[0].witness[0].value[0], 0);
  // 1 + x with v(x) > 0 reaches a negative class.
  ASSERT_EQ(r.conditions[2].witness.size(), 2U);
  const SVElem x = r.conditions[2].witness[0], out = r.conditions[2].witness[1];
  EXPECT_GT(x.value[0], 0);
  EXPECT_EQ(out.sign, -1);
  EXPECT_TRUE(realized(h.one(), x, out, 2));
  // b + a and b - a both meet P although v(b) > v(a).
  ASSERT_EQ(r.conditions[3].witness.size(), 2U);
  const SVElem a = r.conditions[3].witness[0], b = r.conditions[3].witness[1];
  EXPECT_GT(b.value[0], a.value[0]);
  bool plus = false, minus = false;
  for (std::int64_t g = a.value[0] - 2; g <= b.value[0] + 2; ++g) {
    const SVElem w = make_elem(1, {g});
    plus = plus || realized(b, a, w, 2);
    minus = minus || realized(b, -a, w, 2);
  }
  EXPECT_TRUE(plus && minus) << a.to_string() << " " << b.to_string();
}

TEST(PUnits, SpecificFailures) {
  const PUnitHyperfield h(2);
  // (+,0) + (-,1) contains (-,0): 1 - 2*3 = -5.
  EXPECT_TRUE(h.add(make_elem(1, {0}), make_elem(-1, {1})).contains(make_elem(-1, {0})));
  EXPECT_TRUE(realized(make_elem(1, {0}), make_elem(-1, {1}), make_elem(-1, {0}), 2));
  // (+,1) + (+,0) and (+,1) - (+,0) both meet P with v(+,1) > v(+,0).
  const auto p = character_ordering(all_characters(1).front());
  EXPECT_TRUE(meets(h.add(make_elem(1, {1}), make_elem(1, {0})), p));
  EXPECT_TRUE(meets(h.add(make_elem(1, {1}), make_elem(-1, {0})), p));
}

TEST(PUnits, ConvexAndArchimedean) {
  const PUnitHyperfield h(2);
  const auto p = character_ordering(all_characters(1).front());
  // O_v is convex although v is not compatible with P.
  const auto c = convexity_check(h, p, value_cut(1, false), 4);
  EXPECT_TRUE(c.convex);
  EXPECT_GT(c.triples, 0U);
  EXPECT_TRUE(c.violations.empty());
  EXPECT_TRUE(residue_ordering_archimedean(h, p, kQ));
}
