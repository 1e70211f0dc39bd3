#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hfw/homomorphism.hpp"
#include "hfw/report.hpp"
#include "hfw/structure.hpp"

namespace hfw::real {

/// Violations tagged "zero", "closure-add", "closure-mul", "disjoint", "cover".
ViolationReport is_ordering(const FiniteHyperstructure& h, const HSet& p,
                            std::size_t cap = ViolationReport::kDefaultCap);

/// Violations tagged "closure-add", "closure-mul", "squares", "minus-one".
/// A zero in T is ignored.
ViolationReport check_preordering(const FiniteHyperstructure& h, const HSet& t);
bool is_preordering(const FiniteHyperstructure& h, const HSet& t);

/// {x^2 : x != 0}
HSet nonzero_squares(const FiniteHyperstructure& h);

/// All orderings, found among kernels of characters F^x -> {+1,-1} that do
/// not contain -1. Requires every nonzero element to be invertible.
std::vector<HSet> enumerate_orderings(const FiniteHyperstructure& h);
/// Same list by filtering every subset of the nonzero elements.
std::vector<HSet> enumerate_orderings_exhaustive(const FiniteHyperstructure& h);

struct Realness {
  bool real = false;
  /// Every element of some sum of nonzero squares.
  HSet sums_of_squares;
  /// When not real: -1 lies in a sum of this many squares.
  std::optional<std::size_t> minus_one_length;
};
Realness is_real(const FiniteHyperstructure& h);

/// 0 -> 0, P -> 1, -P -> -1. Throws std::invalid_argument if P is not an
/// ordering.
HomomorphismSpec sign_hom(const FiniteHyperstructure& h, const HSet& p);

/// Orderings containing the preordering T. With all = false, the single
/// extension reached by adjoining the least unresolved element (or its
/// negative when that fails) and saturating. Throws std::invalid_argument if
/// T is not a preordering.
std::vector<HSet> maximal_preordering_extensions(const FiniteHyperstructure& h, const HSet& t,
                                                 bool all);

/// I_n = 1 + ... + 1 (n times), n >= 1.
HSet compute_In(const FiniteHyperstructure& h, std::size_t n);

struct InSeq {
  /// sets[i] is I_{i+1}; the sequence is sets[0..], then repeats
  /// sets[cycle_start-1 .. cycle_start+cycle_length-2] forever.
  std::vector<HSet> sets;
  std::size_t cycle_start = 1;
  std::size_t cycle_length = 1;
  const HSet& at(std::size_t n) const;
};
InSeq in_sequence(const FiniteHyperstructure& h);

/// How the "+-" in the definitions of A(P) and I(P) is read.
enum class PmReading { both, either };

/// {a : (I_n + a) and (I_n - a) meet P for some n}
HSet A_of_P(const FiniteHyperstructure& h, const HSet& p, PmReading reading = PmReading::both);
/// {a : 1 + I_n a and 1 - I_n a lie in P for all n}
HSet I_of_P(const FiniteHyperstructure& h, const HSet& p, PmReading reading = PmReading::both);
bool is_archimedean(const FiniteHyperstructure& h, const HSet& p);

/// +1 if a in P, -1 otherwise. Throws std::invalid_argument for a = 0.
int signature(const FiniteHyperstructure& h, const HSet& p, Element a);

}  // namespace hfw::real
