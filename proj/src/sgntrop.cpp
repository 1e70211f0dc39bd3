#include "hfw/sgntrop.hpp"

#include <stdexcept>

#include "hfw/axioms.hpp"
#include "hfw/homomorphism.hpp"
#include "hfw/symbolic_analysis.hpp"

namespace hfw::sym {

SignedTropical::SignedTropical(int k, Mutation mutation)
    : SignValueHyperfield(k), mutation_(mutation) {}

std::string SignedTropical::name() const {
  std::string s = "sgntrop(" + std::to_string(rank()) + ")";
  if (mutation_ == Mutation::wrong_winner) s += "[wrong-winner]";
  return s;
}

SVSet SignedTropical::add(const SVElem& x, const SVElem& y) const {
  check(x);
  check(y);
  if (x.is_zero()) return SVSet::of(y);
  if (y.is_zero()) return SVSet::of(x);
  if (x.sign == y.sign) return SVSet::of(x.value <= y.value ? x : y);
  if (x.value == y.value) return SVSet::ball(x.value);
  const bool x_low = x.value < y.value;
  if (mutation_ == Mutation::wrong_winner) return SVSet::of(x_low ? y : x);
  return SVSet::of(x_low ? x : y);
}

SVSet SignedTropical::add_point_tail(const SVElem& x, int sign, const Value& from) const {
  check(x);
  if (x.is_zero()) return SVSet::tail(sign, from);
  if (x.value < from) return SVSet::of(x);
  if (x.sign != sign) {
    SVSet s = SVSet::tail(sign, from);
    s.insert_tail(x.sign, x.value);
    s.insert(SVElem::zero());
    return s;
  }
  // {(sign, d) : from <= d <= x.value}, finite only along the last coordinate.
  if (!std::equal(from.begin(), from.end() - 1, x.value.begin())) {
    throw std::domain_error("sum is an infinite interval: " + x.to_string() + " + (" +
                            (sign > 0 ? "+" : "-") + ",>=" + format_value(from) + ")");
  }
  SVSet s;
  for (Value d = from; d <= x.value; d.back() += 1) s.insert({sign, d});
  return s;
}

SVSet SignedTropical::add_tail_tail(int s1, const Value& f1, int s2, const Value& f2) const {
  if (s1 == s2) return SVSet::tail(s1, std::min(f1, f2));
  SVSet s = SVSet::tail(s1, f1);
  s.insert_tail(s2, f2);
  s.insert(SVElem::zero());
  return s;
}

NonstrictSubhyperringDemo nonstrict_subhyperring_demo(int k) {
  const SignedTropical f(k);
  const SVElem plus = f.one(), minus = -f.one();
  const std::vector<SVElem> members{SVElem::zero(), plus, minus};
  const InducedFinite induced = induce_finite(f, members);
  if (!induced.structure) throw EquivalenceError("S is not a subhyperring");

  NonstrictSubhyperringDemo demo{*induced.structure, {}, {}, {}, plus, plus, {}, {}};
  demo.induced_is_hyperfield = check_hyperfield(demo.induced).empty();
  demo.isomorphism_from_sign = find_isomorphism(builtin::sign_hyperfield(), demo.induced);
  demo.strict_in_ambient = induced.strict;
  demo.difference = f.add(plus, -plus);
  for (const SVElem& x : demo.difference.members_within(k, 2)) {
    bool in_s = false;
    for (const SVElem& m : members) in_s = in_s || m == x;
    if (!in_s) {
      demo.outside = x;
      break;
    }
  }
  return demo;
}

NonsingletonSumDemo nonsingleton_sum_demo(int k) {
  const SignedTropical f(k);
  NonsingletonSumDemo demo;
  demo.x = f.one();
  demo.y = -f.one();
  demo.sum = f.add(demo.x, demo.y);
  std::set<std::string> values;
  for (const SVElem& z : demo.sum.members_within(k, 3)) {
    values.insert(z.is_zero() ? "inf" : format_value(z.value));
  }
  demo.values_in_window.assign(values.begin(), values.end());
  demo.singleton_values = values.size() == 1;
  demo.u = f.one();
  demo.w = make_elem(-1, unit_vector(k, k - 1));
  demo.distinct_sum = f.add(demo.u, demo.w);
  demo.distinct_singleton = demo.distinct_sum.finite() && demo.distinct_sum.points().size() == 1 &&
                            !demo.distinct_sum.has_zero();
  return demo;
}

}  // namespace hfw::sym
