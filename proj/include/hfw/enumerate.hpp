#pragma once

#include <vector>

#include "hfw/structure.hpp"

namespace hfw::construct {

inline constexpr std::size_t kMaxEnumerationOrder = 5;

/// All hyperfields with exactly n elements up to isomorphism, n <= 5.
/// Each is stored in a canonical labelling (0 first, 1 second) and the list
/// is sorted by that canonical form.
std::vector<FiniteHyperstructure> enumerate_hyperfields(std::size_t n);

/// Canonical relabelling: the lexicographically least table encoding over
/// carrier permutations fixing 0 and 1. Isomorphic hyperfields share it.
FiniteHyperstructure canonical_form(const FiniteHyperstructure& h);

}  // namespace hfw::construct
