#pragma once

#include <array>
#include <string>
#include <vector>

#include "hfw/realalg.hpp"
#include "hfw/structure.hpp"
#include "hfw/valtheory.hpp"

namespace hfw::compat {

/// Outcome of one compatibility condition with a counterexample when false.
struct Condition {
  bool holds = true;
  std::vector<Element> witness;
  std::string detail;
};

struct CompatReport {
  /// (i) A(P) in O_v, (ii) induced residue set is an ordering,
  /// (iii) 1 + M_v in P, (iv) (b+a), (b-a) meeting P forces v(a) >= v(b).
  std::array<Condition, 4> conditions;
  bool agree() const;
  bool compatible() const { return agree() && conditions[0].holds; }
  /// Throws EquivalenceError when the conditions disagree.
  void require_agreement() const;
};

Condition cond_i(const FiniteHyperstructure& h, const val::Valuation& v, const HSet& p);
Condition cond_ii(const FiniteHyperstructure& h, const val::Valuation& v, const HSet& p);
Condition cond_iii(const FiniteHyperstructure& h, const val::Valuation& v, const HSet& p);
Condition cond_iv(const FiniteHyperstructure& h, const val::Valuation& v, const HSet& p);
/// Throws std::invalid_argument if v is not a valuation or P not an ordering.
CompatReport compatibility_report(const FiniteHyperstructure& h, const val::Valuation& v,
                                  const HSet& p);

/// {a + M : a in P, a a unit of O_v} in the indices of the residue.
HSet induced_residue_set(const FiniteHyperstructure& h, const val::Valuation& v, const HSet& p);

/// The valuation of A(P).
val::Valuation natural_valuation(const FiniteHyperstructure& h, const HSet& p);

/// A(P)/I(P) with the induced ordering; true when that ordering is
/// archimedean. Throws EquivalenceError if I(P) is not the maximal ideal of
/// A(P).
bool residue_ordering_archimedean(const FiniteHyperstructure& h, const HSet& p);

struct Convexity {
  bool convex = true;
  /// Triples (a, x, b) with a, b in O, x outside O and a < x < b.
  std::vector<std::array<Element, 3>> violations;
};
/// a < b iff b - a lies in P.
Convexity convexity_check(const FiniteHyperstructure& h, const HSet& p, const HSet& o);

/// {a : a x^2 is a unit whose residue lies in frak_p, for some x != 0}.
HSet lifting_preordering(const FiniteHyperstructure& h, const val::Valuation& v,
                         const HSet& frak_p);
/// Orderings extending the lifting preordering (one, or all). Each is checked
/// to be compatible with v and to induce frak_p. Throws std::invalid_argument
/// if frak_p is not an ordering of the residue.
std::vector<HSet> lift_ordering(const FiniteHyperstructure& h, const val::Valuation& v,
                                const HSet& frak_p, bool all);

/// A homomorphism from a value group into {+1, -1}.
struct Character {
  /// Lex groups: image of each unit vector. Quotient groups: image of each
  /// element.
  std::vector<int> images;
  int operator()(const val::ValueGroup& g, const val::GroupElement& x) const;
  friend bool operator==(const Character&, const Character&) = default;
};
/// All characters: 2^k for Z^k, and every homomorphism of a quotient group.
std::vector<Character> characters_of(const val::ValueGroup& g);

struct BaseOrdering {
  HSet residue_ordering;
  HSet ordering;
};
/// One compatible ordering per residue ordering, from the greedy lift.
std::vector<BaseOrdering> baer_krull_bases(const FiniteHyperstructure& h,
                                           const val::Valuation& v);

struct BaerKrullImage {
  HSet residue_ordering;
  Character character;
};
/// Uses the value group F^x / O_v^x. Throws std::invalid_argument when P is
/// not compatible with v.
BaerKrullImage baer_krull_forward(const FiniteHyperstructure& h, const val::Valuation& v,
                                  const HSet& p, const std::vector<BaseOrdering>& bases);
HSet baer_krull_inverse(const FiniteHyperstructure& h, const val::Valuation& v,
                        const HSet& frak_p, const Character& chi,
                        const std::vector<BaseOrdering>& bases);

}  // namespace hfw::compat
