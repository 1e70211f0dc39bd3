#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfw/structure.hpp"
#include "hfw/symbolic.hpp"

namespace hfw::sym {

/// The signed tropical hyperfield over Z^k with the lexicographic order:
/// same signs give the smaller value, opposite signs the element of smaller
/// value, and opposite signs at equal value g the ball {0} u {(+-, d) : d >= g}.
class SignedTropical : public SignValueHyperfield {
 public:
  /// wrong_winner: opposite signs at unequal values return the element of
  /// larger value (point sums only). For mutation tests.
  enum class Mutation { none, wrong_winner };

  explicit SignedTropical(int k, Mutation mutation = Mutation::none);

  std::string name() const override;
  SVSet add(const SVElem& x, const SVElem& y) const override;
  /// Throws std::domain_error when the result is an infinite interval that is
  /// not a tail (a one-signed tail with k >= 2).
  SVSet add_point_tail(const SVElem& x, int sign, const Value& from) const override;
  SVSet add_tail_tail(int s1, const Value& f1, int s2, const Value& f2) const override;

 private:
  Mutation mutation_;
};

/// S = {(-,0), 0, (+,0)} with the induced addition.
struct NonstrictSubhyperringDemo {
  FiniteHyperstructure induced;
  bool induced_is_hyperfield = false;
  /// Strict bijective homomorphism from the sign hyperfield onto S.
  std::optional<std::vector<Element>> isomorphism_from_sign;
  bool strict_in_ambient = true;
  SVElem a, b;
  SVSet difference;  // a - b computed in the ambient hyperfield
  SVElem outside;    // a member of the difference not in S
};
NonstrictSubhyperringDemo nonstrict_subhyperring_demo(int k = 1);

/// (+,0) + (-,0) takes infinitely many values while sums at distinct values
/// are singletons.
struct NonsingletonSumDemo {
  SVElem x, y;
  SVSet sum;
  std::vector<std::string> values_in_window;  // "inf" for zero
  bool singleton_values = true;
  SVElem u, w;  // distinct values
  SVSet distinct_sum;
  bool distinct_singleton = false;
};
NonsingletonSumDemo nonsingleton_sum_demo(int k = 1);

}  // namespace hfw::sym
