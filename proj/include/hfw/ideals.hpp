#pragma once

#include <vector>

#include "hfw/homomorphism.hpp"
#include "hfw/structure.hpp"

namespace hfw::construct {

/// A strict subhyperring absorbing multiplication by R.
bool is_hyperideal(const FiniteHyperstructure& r, const HSet& i);

struct Quotient {
  FiniteHyperstructure structure;
  /// projection[x] is the class of x.
  std::vector<Element> projection;
  /// classes[c] lists the members of class c.
  std::vector<HSet> classes;

  HomomorphismSpec projection_map(const FiniteHyperstructure& r) const {
    return {r, structure, projection};
  }
};

/// R/I with x ~ y iff (x - y) meets I, (x+I) + (y+I) = {z+I : z in x+y} and
/// (x+I)(y+I) = xy+I. Throws std::invalid_argument if I is not a hyperideal
/// and EquivalenceError if the operations are not well defined.
Quotient quotient(const FiniteHyperstructure& r, const HSet& i);
FiniteHyperstructure quotient_hyperring(const FiniteHyperstructure& r, const HSet& i);

/// Prime: xy in I implies x in I or y in I.
bool is_prime_direct(const FiniteHyperstructure& r, const HSet& i);
/// Prime via R/I being an integral hyperdomain.
bool is_prime_via_quotient(const FiniteHyperstructure& r, const HSet& i);
/// Both routes; throws EquivalenceError if they disagree.
bool is_prime(const FiniteHyperstructure& r, const HSet& i);

/// Maximal: I proper and every strictly larger hyperideal is R.
bool is_maximal_direct(const FiniteHyperstructure& r, const HSet& i);
/// Maximal via R/I being a hyperfield (R must have unity).
bool is_maximal_via_quotient(const FiniteHyperstructure& r, const HSet& i);
bool is_maximal(const FiniteHyperstructure& r, const HSet& i);

/// Smallest hyperideal containing the seed: saturation under a - b, ab and rx.
HSet generated_hyperideal(const FiniteHyperstructure& r, const HSet& seed);

inline constexpr std::size_t kDefaultIdealCarrierBound = 64;

/// All hyperideals, found by closure from {0} (no powerset scan); sorted by
/// size then membership.
std::vector<HSet> enumerate_hyperideals(const FiniteHyperstructure& r,
                                        std::size_t carrier_bound = kDefaultIdealCarrierBound);

}  // namespace hfw::construct
