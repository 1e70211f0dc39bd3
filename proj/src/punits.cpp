#include "hfw/punits.hpp"

#include <stdexcept>

#include "hfw/qfactor.hpp"

namespace hfw::sym {

namespace {

construct::QClass to_class(const SVElem& x) {
  if (x.is_zero()) return {};
  return {x.sign, x.value.at(0)};
}

SVElem from_class(const construct::QClass& c) {
  if (c.is_zero()) return SVElem::zero();
  return {c.sign, Value{c.key}};
}

}  // namespace

PUnitHyperfield::PUnitHyperfield(std::int64_t p) : SignValueHyperfield(1), p_(p) {
  if (!nt::is_prime(p)) throw std::invalid_argument("p must be prime");
}

std::string PUnitHyperfield::name() const { return "q_p_units(" + std::to_string(p_) + ")"; }

SVSet PUnitHyperfield::add(const SVElem& x, const SVElem& y) const {
  check(x);
  check(y);
  const construct::BoundedHSet sum = construct::q_punit_closed_sum(to_class(x), to_class(y), p_);
  SVSet s;
  for (const auto& c : sum.members) s.insert(from_class(c));
  for (const auto& r : sum.rays) s.insert_tail(r.sign, Value{r.from});
  return s;
}

SVSet PUnitHyperfield::add_point_tail(const SVElem& x, int sign, const Value& from) const {
  check(x);
  if (x.is_zero()) return SVSet::tail(sign, from);
  const std::int64_t g = x.value[0], f = from[0];
  SVSet s;
  // Summands of value above g leave x's value in front.
  s.insert(x);
  if (x.sign != sign) s.insert(-x);
  if (g < f) return s;
  for (std::int64_t d = f; d < g; ++d) {
    s.insert({sign, Value{d}});
    if (x.sign != sign) s.insert({-sign, Value{d}});
  }
  s.unite(add(x, {sign, Value{g}}));
  return s;
}

SVSet PUnitHyperfield::add_tail_tail(int s1, const Value& f1, int s2, const Value& f2) const {
  const Value low = std::min(f1, f2);
  if (s1 == s2) return SVSet::tail(s1, low);
  SVSet s = SVSet::ball(low);
  return s;
}

SVElem punit_class(const nt::Rational& a, std::int64_t p) {
  return from_class(construct::q_factor_class(a, construct::QSubgroup::positive_p_units(p)));
}

InducedValuationCheck induced_valuation_check(std::int64_t p, unsigned height) {
  InducedValuationCheck out;
  const construct::QSubgroup t = construct::QSubgroup::positive_p_units(p);
  const auto units = construct::q_subgroup_elements(t, height);
  out.subgroup_elements = units.size();
  for (const nt::Rational& u : units) {
    if (nt::valuation(u, p) != 0) {
      out.failures.push_back("element of T with nonzero value: " + std::to_string(u.numerator()) +
                             "/" + std::to_string(u.denominator()));
    }
  }
  for (std::int64_t n = -static_cast<std::int64_t>(height); n <= static_cast<std::int64_t>(height); ++n) {
    if (n == 0) continue;
    for (std::int64_t d = 1; d <= static_cast<std::int64_t>(height); ++d) {
      const nt::Rational a(n, d);
      ++out.representatives;
      const SVElem c = punit_class(a, p);
      if (c.value[0] != nt::valuation(a, p) || c.sign != (a > 0 ? 1 : -1)) {
        out.failures.push_back("class of " + std::to_string(n) + "/" + std::to_string(d));
      }
      for (const nt::Rational& u : units) {
        if (punit_class(a * u, p) != c) {
          out.failures.push_back("class changes under T: " + std::to_string(n) + "/" +
                                 std::to_string(d));
          break;
        }
      }
    }
  }
  return out;
}

std::vector<IncomparabilityWitness> incomparability_witnesses(std::int64_t p, std::size_t count,
                                                              unsigned height) {
  const construct::QSubgroup t = construct::QSubgroup::positive_p_units(p);
  const auto units = construct::q_subgroup_elements(t, height);
  std::vector<IncomparabilityWitness> out;
  auto rep = [&](std::int64_t g) {
    nt::Rational r(1);
    for (std::int64_t i = 0; i < (g < 0 ? -g : g); ++i) r *= p;
    return g < 0 ? nt::Rational(1) / r : r;
  };
  for (std::int64_t span = 1; out.size() < count; ++span) {
    for (std::int64_t g = 0; g + span <= span + 2 && out.size() < count; ++g) {
      const std::int64_t h = g + span;
      IncomparabilityWitness w;
      w.x = {1, Value{h}};
      w.y = {1, Value{g}};
      const nt::Rational xr = rep(h), yr = rep(g);
      bool first = false, second = false;
      for (const nt::Rational& a : units) {
        for (const nt::Rational& b : units) {
          const nt::Rational d = xr * a - yr * b;
          if (!first && d > 0) {
            w.t1 = a, w.u1 = b, w.value1 = d;
            first = true;
          }
          if (!second && d < 0) {
            w.t2 = a, w.u2 = b, w.value2 = -d;
            second = true;
          }
        }
      }
      if (!first || !second) {
        throw std::runtime_error("no incomparability witness for " + w.x.to_string() + ", " +
                                 w.y.to_string());
      }
      out.push_back(w);
    }
    if (span > 64) throw std::runtime_error("too few incomparable pairs");
  }
  return out;
}

}  // namespace hfw::sym
