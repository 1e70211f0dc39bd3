#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hfw/report.hpp"
#include "hfw/structure.hpp"
#include "hfw/symbolic.hpp"

namespace hfw::sym {

/// Which elements a universally quantified statement is tested on: every
/// element with values in [-window, window]^k, plus the probe elements.
struct Quantifier {
  int window = 6;
  bool probes = true;
};
std::vector<SVElem> quantified_elements(int k, const Quantifier& q);

/// H1-H4, R1-R3 and invertibility over the window, with exact set equality.
ViolationReport check_axioms(const SignValueHyperfield& h, int window,
                             std::size_t cap = ViolationReport::kDefaultCap);

/// Ordering axioms on the quantified elements: "zero", "closure-add",
/// "closure-mul", "disjoint", "cover".
ViolationReport is_ordering(const SignValueHyperfield& h, const SymbolicSubset& p,
                            const Quantifier& q);
/// Characters chi whose set {(s, g) : s = chi(g)} passes is_ordering. Every
/// ordering is the kernel of a sign character F^x -> {+1, -1} not containing
/// -1, and those kernels are exactly these sets.
std::vector<SignCharacter> enumerate_orderings(const SignValueHyperfield& h, const Quantifier& q);

/// Sums of nonzero squares inside the window never reach -1.
bool sums_of_squares_avoid_minus_one(const SignValueHyperfield& h, int window);

ViolationReport check_preordering(const SignValueHyperfield& h, const SymbolicSubset& t,
                                  const Quantifier& q);

struct SymInSeq {
  std::vector<SVSet> sets;  // sets[i] = I_{i+1}
  std::size_t cycle_start = 1;
  std::size_t cycle_length = 1;
};
/// Throws std::runtime_error if no repetition appears within max_steps.
SymInSeq in_sequence(const SignValueHyperfield& h, std::size_t max_steps = 64);

/// Membership in A(P) and I(P) straight from the definitions over the cycle.
bool in_A(const SignValueHyperfield& h, const SymInSeq& seq, const SymbolicSubset& p,
          const SVElem& a);
bool in_I(const SignValueHyperfield& h, const SymInSeq& seq, const SymbolicSubset& p,
          const SVElem& a);

struct HullComparison {
  std::size_t checked = 0;
  std::vector<SVElem> a_mismatches;
  std::vector<SVElem> i_mismatches;
  bool agree() const { return a_mismatches.empty() && i_mismatches.empty(); }
};
/// Compares the definitions of A(P), I(P) with the expected closed forms.
HullComparison compare_hull(const SignValueHyperfield& h, const SymbolicSubset& p,
                            const SymbolicSubset& expected_a, const SymbolicSubset& expected_i,
                            const Quantifier& q);

/// v(s, g) = first `level` coordinates of g; level 0 is the trivial
/// valuation. `custom` replaces the rule (mutation tests).
struct SymValuation {
  int level = 1;
  std::function<std::optional<Value>(const SVElem&)> custom;
  std::optional<Value> operator()(const SVElem& x) const;
  SymbolicSubset ring() const { return value_cut(level, false); }
  SymbolicSubset ideal() const { return value_cut(level, true); }
};

ViolationReport is_valuation(const SignValueHyperfield& h, const SymValuation& v,
                             const Quantifier& q);
ViolationReport is_valuation_hyperring(const SignValueHyperfield& h, const SymbolicSubset& o,
                                       const Quantifier& q);

/// O -> Gamma = F^x/O^x -> O_pi, and v -> O_v -> pi compared with v as orders.
struct RoundTrip {
  bool ring_recovered = true;
  bool order_recovered = true;
  std::vector<std::string> failures;
};
RoundTrip valuation_round_trip(const SignValueHyperfield& h, const SymValuation& v,
                               const Quantifier& q);

/// O_v / M_v for the full-rank valuation, as a finite table whose classes are
/// represented by 0, (+,0) and (-,0) (merged when related).
struct SymResidue {
  FiniteHyperstructure structure;
  std::vector<SVElem> representatives;
  Element class_of(const SVElem& x) const;
};
SymResidue residue(const SignValueHyperfield& h, const Quantifier& q);

struct SymCondition {
  bool holds = true;
  std::vector<SVElem> witness;
  std::string detail;
};
struct SymCompatReport {
  std::array<SymCondition, 4> conditions;
  bool agree() const;
  bool compatible() const { return agree() && conditions[0].holds; }
  void require_agreement() const;
};
/// The four conditions for a valuation of level 0 or full rank.
SymCompatReport compatibility_report(const SignValueHyperfield& h, const SymValuation& v,
                                     const SymbolicSubset& p, const Quantifier& q);
/// Image of P in the residue (full-rank valuation).
HSet induced_residue_set(const SignValueHyperfield& h, const SymResidue& r,
                         const SymbolicSubset& p);

struct SymConvexity {
  bool convex = true;
  std::size_t triples = 0;
  std::vector<std::array<SVElem, 3>> violations;
};
/// a < x < b with a, b in O, x outside O, where a < b iff b - a lies in P;
/// over the window.
SymConvexity convexity_check(const SignValueHyperfield& h, const SymbolicSubset& p,
                             const SymbolicSubset& o, int window);

/// {(s, g) : g in (2Z)^k, class of (s, 0) in frak_p}.
SymbolicSubset lifting_preordering(const SignValueHyperfield& h, const SymResidue& r,
                                   const HSet& frak_p);
/// Window elements a with a x^2 a unit of residue in frak_p for some x in a
/// window twice as wide; compared against the closed form. Returns mismatches.
std::vector<SVElem> lifting_preordering_mismatches(const SignValueHyperfield& h,
                                                   const SymResidue& r, const HSet& frak_p,
                                                   int window);
/// Extends the lifting preordering by branching on (+, e_i) versus (-, e_i),
/// + first; all = false keeps the first leaf. Leaves are checked to be
/// orderings, compatible, and to induce frak_p.
std::vector<SignCharacter> lift_ordering(const SignValueHyperfield& h, const SymResidue& r,
                                         const HSet& frak_p, bool all, const Quantifier& q);

struct SymBaerKrullImage {
  HSet residue_ordering;
  SignCharacter character;
};
/// chi(v(a)) = sgn_base(a) sgn_P(a), checked well defined and multiplicative
/// on the quantified elements.
SymBaerKrullImage baer_krull_forward(const SignValueHyperfield& h, const SymResidue& r,
                                     const SignCharacter& p, const SignCharacter& base,
                                     const Quantifier& q);
/// {x : (h(v(x)) = 1 and x in base) or (h(v(x)) = -1 and -x in base)},
/// returned as the character ordering it coincides with on the quantified
/// elements.
SignCharacter baer_krull_inverse(const SignValueHyperfield& h, const SignCharacter& chi,
                                 const SignCharacter& base, const Quantifier& q);

/// Builds A(P)/I(P) with the induced ordering and tests whether it is
/// archimedean. Handles natural valuations that are trivial or full rank.
bool residue_ordering_archimedean(const SignValueHyperfield& h, const SymbolicSubset& p,
                                  const Quantifier& q);

/// The finite structure induced on a finite subset (sums intersected with
/// it), and whether the subset is closed under full differences.
struct InducedFinite {
  std::optional<FiniteHyperstructure> structure;  // nullopt: not a hyperring
  bool strict = true;
  std::optional<std::array<SVElem, 2>> strictness_witness;
};
InducedFinite induce_finite(const SignValueHyperfield& h, const std::vector<SVElem>& members);

}  // namespace hfw::sym
