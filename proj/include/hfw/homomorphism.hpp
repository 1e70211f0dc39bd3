#pragma once

#include <optional>
#include <vector>

#include "hfw/report.hpp"
#include "hfw/structure.hpp"

namespace hfw {

/// A total map between two finite carriers.
struct HomomorphismSpec {
  FiniteHyperstructure source;
  FiniteHyperstructure target;
  std::vector<Element> map;

  Element operator()(Element x) const { return map.at(x); }
  HSet image(const HSet& s) const;
};

/// HH1, HH2, HH3 (or HH3' when strict) and the derived phi(-x) = -phi(x).
ViolationReport check_homomorphism(const HomomorphismSpec& phi, bool strict,
                                   std::size_t cap = ViolationReport::kDefaultCap);

/// {x : phi(x) = 0}. Throws std::invalid_argument if phi is not a homomorphism.
HSet kernel(const HomomorphismSpec& phi);

HomomorphismSpec identity_map(const FiniteHyperstructure& h);

/// A strict bijective homomorphism a -> b, if one exists.
std::optional<std::vector<Element>> find_isomorphism(const FiniteHyperstructure& a,
                                                     const FiniteHyperstructure& b);

struct Subhyperring {
  FiniteHyperstructure structure;
  /// embedding[i] is the element of the ambient carrier for induced index i.
  std::vector<Element> embedding;
  /// a - b in S and ab in S for all a, b in S.
  bool strict = false;
};

/// S with a +_S b := (a + b) cap S, if that is a hyperring closed under
/// multiplication. Requires 0 in S.
std::optional<Subhyperring> induced_subhyperring(const FiniteHyperstructure& h, const HSet& s);

/// a - b subset of S and ab in S for all a, b in S.
bool is_strict_subset(const FiniteHyperstructure& h, const HSet& s);

}  // namespace hfw
