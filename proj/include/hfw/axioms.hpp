#pragma once

#include <array>
#include <vector>

#include "hfw/report.hpp"
#include "hfw/structure.hpp"

namespace hfw {

/// H1 (associativity of the set-lifted sum), H2, H3 (unique negative, agreeing
/// with the stored negation), H4 (reversibility).
ViolationReport check_canonical_hypergroup(const FiniteHyperstructure& h,
                                           std::size_t cap = ViolationReport::kDefaultCap);

/// R1 = canonical hypergroup, R2 = commutative semigroup with x*0 = 0,
/// R3 = x(y + z) = xy + xz.
ViolationReport check_hyperring(const FiniteHyperstructure& h,
                                std::size_t cap = ViolationReport::kDefaultCap);

/// Hyperring with a unity 1 != 0 whose nonzero elements form a group.
ViolationReport check_hyperfield(const FiniteHyperstructure& h,
                                 std::size_t cap = ViolationReport::kDefaultCap);

struct DoubleDistributivity {
  bool inclusion_ok = true;
  /// (a, b, c, d) with (a+b)(c+d) not contained in ac+ad+bc+bd.
  std::vector<std::array<Element, 4>> inclusion_failures;
  /// (a, b, c, d) where the inclusion is strict.
  std::vector<std::array<Element, 4>> equality_failures;
};

DoubleDistributivity check_double_distributivity(const FiniteHyperstructure& h);

/// True when xy = 0 forces x = 0 or y = 0.
bool is_integral_hyperdomain(const FiniteHyperstructure& h);

}  // namespace hfw
