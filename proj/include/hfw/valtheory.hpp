#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfw/homomorphism.hpp"
#include "hfw/ideals.hpp"
#include "hfw/report.hpp"
#include "hfw/structure.hpp"

namespace hfw::val {

/// An element of a value group: a vector in Z^k (lex kind) or a single coset
/// index (quotient kind).
using GroupElement = std::vector<std::int64_t>;

/// A totally ordered abelian group, either Z^k with the lexicographic order or
/// a finite presentation by an operation table and an order relation.
class ValueGroup {
 public:
  enum class Kind { lex, quotient };

  static ValueGroup lex(int k);
  /// op[i][j] is the index of i + j; leq[i][j] tells whether i <= j.
  static ValueGroup quotient(std::vector<std::vector<std::size_t>> op,
                             std::vector<std::vector<bool>> leq, std::size_t identity,
                             std::vector<std::string> names);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::size_t order() const { return op_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  GroupElement identity() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  bool leq(const GroupElement& a, const GroupElement& b) const;
  bool less(const GroupElement& a, const GroupElement& b) const { return !leq(b, a); }
  std::string format(const GroupElement& a) const;

  /// Totality, antisymmetry, transitivity, translation invariance and the
  /// group laws, on every element of a quotient group; empty for lex.
  ViolationReport check() const;

 private:
  Kind kind_ = Kind::lex;
  int rank_ = 1;
  std::vector<std::vector<std::size_t>> op_;
  std::vector<std::vector<bool>> leq_;
  std::size_t identity_ = 0;
  std::vector<std::string> names_;
  void check_element(const GroupElement& a) const;
};

/// A value per carrier element; nullopt stands for infinity.
struct Valuation {
  ValueGroup group;
  std::vector<std::optional<GroupElement>> values;
};

Valuation trivial_valuation(const FiniteHyperstructure& h);

/// V1-V3 plus v(1) = v(-1) = 0, v(-a) = v(a), v(1/a) = -v(a) and
/// v(c) = min(v(a), v(b)) for c in a + b when v(a) != v(b).
ViolationReport is_valuation(const FiniteHyperstructure& h, const Valuation& v,
                             std::size_t cap = ViolationReport::kDefaultCap);

/// Subhyperring containing x or 1/x for each x != 0; the strictness
/// a - b subset of O is reported as "strict".
ViolationReport is_valuation_hyperring(const FiniteHyperstructure& h, const HSet& o);

struct UnitsAndIdeal {
  HSet units;
  HSet maximal;
};
/// Throws std::invalid_argument if O is not a valuation hyperring.
UnitsAndIdeal units_and_maximal_ideal(const FiniteHyperstructure& h, const HSet& o);

/// O as a hyperring in its own right with M in its local indices.
struct LocalRing {
  Subhyperring ring;
  HSet maximal;
};
LocalRing local_ring(const FiniteHyperstructure& h, const HSet& o);

/// Gamma = F^x / O^x with aO^x <= bO^x iff b/a in O; v is the projection.
Valuation valuation_from_hyperring(const FiniteHyperstructure& h, const HSet& o);

struct ValuationRing {
  HSet o;
  HSet m;
};
/// O_v = {v >= 0}, M_v = {v > 0}. Throws std::invalid_argument for invalid v.
ValuationRing ring_from_valuation(const FiniteHyperstructure& h, const Valuation& v);

/// O/M, checked to be a hyperfield.
construct::Quotient residue_hyperfield(const FiniteHyperstructure& h, const HSet& o);

/// Same nonzero support and v1(x) <= v1(y) iff v2(x) <= v2(y): the images are
/// isomorphic as ordered groups via x's value.
bool equivalent(const FiniteHyperstructure& h, const Valuation& a, const Valuation& b);

/// Every valuation hyperring: unions of 0 with the cosets of a subgroup U of
/// F^x lying in a positive cone of F^x/U.
std::vector<HSet> enumerate_valuation_hyperrings(const FiniteHyperstructure& h);
/// Same list by filtering every subset containing 0.
std::vector<HSet> enumerate_valuation_hyperrings_exhaustive(const FiniteHyperstructure& h);

/// All subgroups of F^x, sorted.
std::vector<HSet> multiplicative_subgroups(const FiniteHyperstructure& h);

}  // namespace hfw::val
