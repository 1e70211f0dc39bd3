#include "hfw/qfactor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hfw::construct {

namespace {

// Witness searches for the closed-form kinds use numerators and denominators
// up to this bound regardless of the requested height.
constexpr unsigned kClosedFormWitnessHeight = 16;

Rational power(std::int64_t p, std::int64_t e) {
  Rational r(1);
  for (std::int64_t i = 0; i < std::llabs(e); ++i) r *= p;
  return e >= 0 ? r : Rational(1) / r;
}

}  // namespace

QSubgroup QSubgroup::positive_p_units(std::int64_t p) {
  if (!nt::is_prime(p)) throw std::invalid_argument("positive_p_units needs a prime");
  return {QSubgroupKind::positive_p_units, p};
}

bool QSubgroup::contains(const Rational& a) const {
  if (a <= 0) return false;
  switch (kind) {
    case QSubgroupKind::positives:
      return true;
    case QSubgroupKind::squares:
      return nt::squarefree_class(a) == 1;
    case QSubgroupKind::positive_p_units:
      return nt::valuation(a, p) == 0;
  }
  return false;
}

std::string QSubgroup::name() const {
  switch (kind) {
    case QSubgroupKind::positives:
      return "positives";
    case QSubgroupKind::squares:
      return "squares";
    case QSubgroupKind::positive_p_units:
      return "positive_" + std::to_string(p) + "_units";
  }
  return "?";
}

QClass q_factor_class(const Rational& a, const QSubgroup& t) {
  if (a.numerator() == 0) return {};
  const int sign = a > 0 ? 1 : -1;
  switch (t.kind) {
    case QSubgroupKind::positives:
      return {sign, 0};
    case QSubgroupKind::squares:
      return {sign, std::llabs(nt::squarefree_class(a))};
    case QSubgroupKind::positive_p_units:
      return {sign, nt::valuation(a, t.p)};
  }
  return {};
}

Rational q_representative(const QClass& c, const QSubgroup& t) {
  if (c.is_zero()) return Rational(0);
  switch (t.kind) {
    case QSubgroupKind::positives:
      return Rational(c.sign);
    case QSubgroupKind::squares:
      return Rational(c.sign * c.key);
    case QSubgroupKind::positive_p_units:
      return power(t.p, c.key) * c.sign;
  }
  return Rational(0);
}

std::string q_label(const QClass& c, const QSubgroup& t) {
  if (c.is_zero()) return "0";
  const std::string s = c.sign > 0 ? "+" : "-";
  switch (t.kind) {
    case QSubgroupKind::positives:
      return s;
    case QSubgroupKind::squares:
      return "[" + std::string(c.sign > 0 ? "" : "-") + std::to_string(c.key) + "]";
    case QSubgroupKind::positive_p_units:
      return "(" + s + "," + std::to_string(c.key) + ")";
  }
  return "?";
}

bool BoundedHSet::contains(const QClass& c) const {
  if (members.count(c)) return true;
  if (!c.is_zero()) {
    for (const QRay& r : rays) {
      if (r.sign == c.sign && c.key >= r.from) return true;
    }
  }
  if (certificate == Certificate::two_squares) {
    return c.sign > 0 && nt::sum_of_two_squares_class(c.key);
  }
  return false;
}

std::vector<Rational> q_subgroup_elements(const QSubgroup& t, unsigned height) {
  std::set<Rational> out;
  for (std::int64_t n = 1; n <= height; ++n) {
    for (std::int64_t d = 1; d <= height; ++d) {
      if (std::gcd(n, d) != 1) continue;
      Rational r(n, d);
      if (t.contains(r)) out.insert(r);
    }
  }
  return {out.begin(), out.end()};
}

BoundedHSet q_punit_closed_sum(const QClass& x, const QClass& y, std::int64_t p) {
  BoundedHSet out;
  out.complete = true;
  if (x.is_zero()) {
    out.members.insert(y);
    return out;
  }
  if (y.is_zero()) {
    out.members.insert(x);
    return out;
  }
  if (x.key != y.key) {
    const QClass& low = x.key < y.key ? x : y;
    out.members.insert(low);
    if (x.sign != y.sign) out.members.insert({-low.sign, low.key});
    return out;
  }
  // Equal values: x(t + u) or x(t - u) with t, u positive p-units. For p = 2
  // an odd-over-odd sum or difference has even numerator, so the value jumps.
  const std::int64_t from = p == 2 ? x.key + 1 : x.key;
  if (x.sign == y.sign) {
    out.rays.push_back({x.sign, from});
  } else {
    out.members.insert(QClass{});
    out.rays.push_back({-1, from});
    out.rays.push_back({1, from});
  }
  return out;
}

BoundedHSet q_factor_sum(const QClass& x, const QClass& y, const QSubgroup& t,
                         unsigned height_bound) {
  if (height_bound < 1) throw std::invalid_argument("height_bound must be at least 1");
  const Rational xr = q_representative(x, t);
  const Rational yr = q_representative(y, t);
  BoundedHSet out;
  out.height_bound = height_bound;

  if (t.kind == QSubgroupKind::squares) {
    // (a/b)^2 and (c/d)^2 scale to integers m = ad, n = cb after clearing the
    // common square denominator, so integer m, n suffice.
    for (std::int64_t m = 1; m <= height_bound; ++m) {
      for (std::int64_t n = 1; n <= height_bound; ++n) {
        const Rational tt(m * m), u(n * n);
        const Rational value = xr * tt + yr * u;
        const QClass c = q_factor_class(value, t);
        if (out.members.insert(c).second) out.witnesses[c] = {tt, u, value};
      }
    }
    if (x.is_zero() || y.is_zero()) out.complete = true;
    if (x == QClass{1, 1} && y == QClass{1, 1}) out.certificate = Certificate::two_squares;
    return out;
  }

  if (t.kind == QSubgroupKind::positives) {
    out.complete = true;
    if (x.is_zero()) {
      out.members.insert(y);
    } else if (y.is_zero()) {
      out.members.insert(x);
    } else if (x.sign == y.sign) {
      out.members.insert(x);
    } else {
      out.members = {QClass{-1, 0}, QClass{}, QClass{1, 0}};
    }
  } else {
    out = q_punit_closed_sum(x, y, t.p);
    out.height_bound = height_bound;
  }

  const auto elems = q_subgroup_elements(t, std::min(height_bound, kClosedFormWitnessHeight));
  for (const Rational& tt : elems) {
    for (const Rational& u : elems) {
      const Rational value = xr * tt + yr * u;
      const QClass c = q_factor_class(value, t);
      if (!out.witnesses.count(c)) out.witnesses[c] = {tt, u, value};
    }
  }
  return out;
}

}  // namespace hfw::construct

namespace hfw::construct {

FiniteHyperstructure q_positives_hyperfield() {
  const QSubgroup t = QSubgroup::positives();
  const std::vector<QClass> classes{QClass{}, QClass{1, 0}, QClass{-1, 0}};
  auto index = [&](const QClass& c) {
    return static_cast<Element>(std::find(classes.begin(), classes.end(), c) - classes.begin());
  };
  std::vector<std::string> labels;
  std::vector<Element> neg;
  std::vector<std::vector<Element>> mul(3, std::vector<Element>(3));
  std::vector<std::vector<HSet>> add(3, std::vector<HSet>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    labels.push_back(q_label(classes[i], t));
    neg.push_back(index({-classes[i].sign, 0}));
    for (std::size_t j = 0; j < 3; ++j) {
      mul[i][j] = index({classes[i].sign * classes[j].sign, 0});
      for (const QClass& c : q_factor_sum(classes[i], classes[j], t, 4).members) {
        add[i][j].insert(index(c));
      }
    }
  }
  return FiniteHyperstructure("Q_pos", labels, 0, 1, neg, mul, add);
}

}  // namespace hfw::construct
