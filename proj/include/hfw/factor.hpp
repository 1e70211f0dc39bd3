#pragma once

#include <vector>

#include "hfw/structure.hpp"

namespace hfw::construct {

inline constexpr int kDefaultPrimeBound = 101;

/// A multiplicative subgroup T of F_p^x, stored as its sorted element list.
class SubgroupSpec {
 public:
  /// Subgroup generated by the given nonzero residues.
  static SubgroupSpec from_generators(int p, const std::vector<int>& generators);
  /// The given residues, which must already form a subgroup.
  static SubgroupSpec from_elements(int p, const std::vector<int>& elements);

  int modulus() const { return p_; }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int x) const;

 private:
  SubgroupSpec(int p, std::vector<int> elements) : p_(p), elements_(std::move(elements)) {}
  int p_;
  std::vector<int> elements_;
};

/// Krasner's factor hyperfield (F_p)_T: cosets xT plus [0], with
/// [x] + [y] = {[xt + yu] : t, u in T} and [x][y] = [xy]. Classes are
/// ordered by their least residue and labelled "[r]".
FiniteHyperstructure factor_hyperfield(int p, const SubgroupSpec& t,
                                       int prime_bound = kDefaultPrimeBound);

/// The class index of residue x in factor_hyperfield(p, t).
Element factor_class(const SubgroupSpec& t, int x);

/// The subgroup of nonzero squares of F_p.
SubgroupSpec squares_subgroup(int p);

}  // namespace hfw::construct
