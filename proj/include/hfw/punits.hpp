#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfw/number_theory.hpp"
#include "hfw/symbolic.hpp"

namespace hfw::sym {

/// Q modulo the positive rationals prime to p (p-adic units), as pairs
/// (sign, v_p) with the sums of the factor construction in closed form.
class PUnitHyperfield : public SignValueHyperfield {
 public:
  explicit PUnitHyperfield(std::int64_t p);
  std::int64_t prime() const { return p_; }
  std::string name() const override;
  SVSet add(const SVElem& x, const SVElem& y) const override;
  SVSet add_point_tail(const SVElem& x, int sign, const Value& from) const override;
  SVSet add_tail_tail(int s1, const Value& f1, int s2, const Value& f2) const override;

 private:
  std::int64_t p_;
};

/// The class (sign(a), v_p(a)) of a nonzero rational.
SVElem punit_class(const nt::Rational& a, std::int64_t p);

/// The valuation [a] -> v_p(a) induced on the factor hyperfield: every element
/// of T has value 0, and the value of a class does not depend on the
/// representative.
struct InducedValuationCheck {
  std::size_t subgroup_elements = 0;
  std::size_t representatives = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
InducedValuationCheck induced_valuation_check(std::int64_t p, unsigned height);

/// Members of (x - y) and (y - x) that are positive, with x t - y u for
/// positive p-units t, u.
struct IncomparabilityWitness {
  SVElem x, y;
  nt::Rational t1, u1, value1;  // x t1 - y u1 > 0
  nt::Rational t2, u2, value2;  // y u2 - x t2 > 0
};
/// Pairs of distinct positive classes (+, g), (+, h) with g != h, for g, h in
/// [0, count], each found by search over p-units of height <= height.
/// Throws std::runtime_error if a witness is missing.
std::vector<IncomparabilityWitness> incomparability_witnesses(std::int64_t p, std::size_t count,
                                                              unsigned height);

}  // namespace hfw::sym
