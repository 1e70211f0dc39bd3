#include "hfw/compat.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfw::compat {

bool CompatReport::agree() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](const Condition& c) { return c.holds == conditions[0].holds; });
}

void CompatReport::require_agreement() const {
  if (agree()) return;
  std::string s = "compatibility conditions disagree:";
  for (const Condition& c : conditions) s += c.holds ? " T" : " F";
  throw EquivalenceError(s);
}

namespace {

using val::GroupElement;
using val::Valuation;

HSet residue_image(const val::LocalRing& local, const construct::Quotient& q, const HSet& s) {
  HSet out;
  for (Element i = 0; i < local.ring.embedding.size(); ++i) {
    if (s.contains(local.ring.embedding[i])) out.insert(q.projection[i]);
  }
  return out;
}

bool value_leq(const Valuation& v, Element a, Element b) {
  const auto& x = v.values[a];
  const auto& y = v.values[b];
  if (!y) return true;
  if (!x) return false;
  return v.group.leq(*x, *y);
}

}  // namespace

Condition cond_i(const FiniteHyperstructure& h, const Valuation& v, const HSet& p) {
  const val::ValuationRing ring = val::ring_from_valuation(h, v);
  Condition c;
  for (Element a : real::A_of_P(h, p) - ring.o) {
    c.holds = false;
    c.witness = {a};
    c.detail = h.label(a) + " in A(P) but not in O_v";
    break;
  }
  return c;
}

HSet induced_residue_set(const FiniteHyperstructure& h, const Valuation& v, const HSet& p) {
  const val::ValuationRing ring = val::ring_from_valuation(h, v);
  const val::LocalRing local = val::local_ring(h, ring.o);
  const construct::Quotient q = val::residue_hyperfield(h, ring.o);
  return residue_image(local, q, p & (ring.o - ring.m));
}

Condition cond_ii(const FiniteHyperstructure& h, const Valuation& v, const HSet& p) {
  const val::ValuationRing ring = val::ring_from_valuation(h, v);
  const construct::Quotient q = val::residue_hyperfield(h, ring.o);
  const HSet induced = induced_residue_set(h, v, p);
  const ViolationReport r = real::is_ordering(q.structure, induced, 1);
  Condition c;
  if (!r.empty()) {
    c.holds = false;
    c.witness = r.violations().front().witness;
    c.detail = "induced set " + q.structure.format(induced) + " fails " + r.axioms().front();
  }
  return c;
}

Condition cond_iii(const FiniteHyperstructure& h, const Valuation& v, const HSet& p) {
  const val::ValuationRing ring = val::ring_from_valuation(h, v);
  const Element one = h.one_or_throw();
  Condition c;
  for (Element m : ring.m) {
    for (Element x : h.add(one, m)) {
      if (!p.contains(x)) {
        c.holds = false;
        c.witness = {m, x};
        c.detail = h.label(x) + " in 1 + " + h.label(m) + " lies outside P";
        return c;
      }
    }
  }
  return c;
}

Condition cond_iv(const FiniteHyperstructure& h, const Valuation& v, const HSet& p) {
  val::ring_from_valuation(h, v);
  Condition c;
  for (Element a : h.carrier()) {
    for (Element b : h.carrier()) {
      if (h.add(b, a).intersects(p) && h.add(b, h.neg(a)).intersects(p) && !value_leq(v, b, a)) {
        c.holds = false;
        c.witness = {a, b};
        c.detail = "b +- a meet P but v(a) < v(b)";
        return c;
      }
    }
  }
  return c;
}

CompatReport compatibility_report(const FiniteHyperstructure& h, const Valuation& v,
                                  const HSet& p) {
  const ViolationReport bad = real::is_ordering(h, p);
  if (!bad.empty()) throw std::invalid_argument("not an ordering: " + bad.summary());
  CompatReport r;
  r.conditions = {cond_i(h, v, p), cond_ii(h, v, p), cond_iii(h, v, p), cond_iv(h, v, p)};
  return r;
}

Valuation natural_valuation(const FiniteHyperstructure& h, const HSet& p) {
  return val::valuation_from_hyperring(h, real::A_of_P(h, p));
}

bool residue_ordering_archimedean(const FiniteHyperstructure& h, const HSet& p) {
  const HSet a = real::A_of_P(h, p);
  const val::UnitsAndIdeal um = val::units_and_maximal_ideal(h, a);
  if (um.maximal != real::I_of_P(h, p)) {
    throw EquivalenceError("I(P) differs from the maximal ideal of A(P)");
  }
  const val::LocalRing local = val::local_ring(h, a);
  const construct::Quotient q = val::residue_hyperfield(h, a);
  const HSet induced = residue_image(local, q, p & um.units);
  if (!real::is_ordering(q.structure, induced).empty()) {
    throw EquivalenceError("P does not induce an ordering on A(P)/I(P)");
  }
  return real::is_archimedean(q.structure, induced);
}

Convexity convexity_check(const FiniteHyperstructure& h, const HSet& p, const HSet& o) {
  auto less = [&](Element a, Element b) { return hyper_add(h, b, h.neg(a)).subset_of(p); };
  Convexity out;
  for (Element x : h.carrier() - o) {
    for (Element a : o) {
      if (!less(a, x)) continue;
      for (Element b : o) {
        if (less(x, b)) {
          out.convex = false;
          out.violations.push_back({a, x, b});
        }
      }
    }
  }
  return out;
}

HSet lifting_preordering(const FiniteHyperstructure& h, const Valuation& v, const HSet& frak_p) {
  const val::ValuationRing ring = val::ring_from_valuation(h, v);
  const val::LocalRing local = val::local_ring(h, ring.o);
  const construct::Quotient q = val::residue_hyperfield(h, ring.o);
  const HSet units = ring.o - ring.m;
  HSet t;
  for (Element a : h.nonzero()) {
    for (Element x : h.nonzero()) {
      const Element y = h.mul(a, h.mul(x, x));
      if (units.contains(y) && residue_image(local, q, HSet{y}).subset_of(frak_p)) {
        t.insert(a);
        break;
      }
    }
  }
  return t;
}

std::vector<HSet> lift_ordering(const FiniteHyperstructure& h, const Valuation& v,
                                const HSet& frak_p, bool all) {
  const val::ValuationRing ring = val::ring_from_valuation(h, v);
  const construct::Quotient q = val::residue_hyperfield(h, ring.o);
  const ViolationReport bad = real::is_ordering(q.structure, frak_p);
  if (!bad.empty()) throw std::invalid_argument("not a residue ordering: " + bad.summary());
  const HSet t = lifting_preordering(h, v, frak_p);
  if (!real::is_preordering(h, t)) {
    throw EquivalenceError("lifting set is not a preordering: " +
                           real::check_preordering(h, t).summary());
  }
  std::vector<HSet> out = real::maximal_preordering_extensions(h, t, all);
  for (const HSet& p : out) {
    if (!compatibility_report(h, v, p).compatible()) {
      throw EquivalenceError("lifted ordering " + h.format(p) + " is not compatible");
    }
    if (induced_residue_set(h, v, p) != frak_p) {
      throw EquivalenceError("lifted ordering " + h.format(p) + " induces another ordering");
    }
  }
  return out;
}

int Character::operator()(const val::ValueGroup& g, const GroupElement& x) const {
  if (g.kind() == val::ValueGroup::Kind::quotient) return images.at(x.at(0));
  int s = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (images.at(i) == -1 && (x[i] % 2 != 0)) s = -s;
  }
  return s;
}

std::vector<Character> characters_of(const val::ValueGroup& g) {
  std::vector<Character> out;
  if (g.kind() == val::ValueGroup::Kind::lex) {
    const int k = g.rank();
    for (unsigned bits = 0; bits < (1U << k); ++bits) {
      Character c;
      for (int i = 0; i < k; ++i) c.images.push_back(((bits >> i) & 1U) ? -1 : 1);
      out.push_back(c);
    }
    return out;
  }
  const std::size_t n = g.order();
  if (n > 16) throw std::invalid_argument("value group too large for character search");
  const GroupElement e = g.identity();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Character c;
    for (std::size_t i = 0; i < n; ++i) c.images.push_back(((bits >> i) & 1U) ? -1 : 1);
    bool hom = c.images[e[0]] == 1;
    for (std::size_t i = 0; i < n && hom; ++i) {
      for (std::size_t j = 0; j < n && hom; ++j) {
        const GroupElement a{static_cast<std::int64_t>(i)}, b{static_cast<std::int64_t>(j)};
        hom = c(g, g.add(a, b)) == c(g, a) * c(g, b);
      }
    }
    if (hom) out.push_back(c);
  }
  return out;
}

std::vector<BaseOrdering> baer_krull_bases(const FiniteHyperstructure& h, const Valuation& v) {
  const val::ValuationRing ring = val::ring_from_valuation(h, v);
  const construct::Quotient q = val::residue_hyperfield(h, ring.o);
  std::vector<BaseOrdering> out;
  for (const HSet& frak_p : real::enumerate_orderings(q.structure)) {
    out.push_back({frak_p, lift_ordering(h, v, frak_p, false).front()});
  }
  return out;
}

namespace {

const BaseOrdering& base_for(const std::vector<BaseOrdering>& bases, const HSet& frak_p) {
  for (const BaseOrdering& b : bases) {
    if (b.residue_ordering == frak_p) return b;
  }
  throw std::invalid_argument("no base ordering for the residue ordering");
}

}  // namespace

BaerKrullImage baer_krull_forward(const FiniteHyperstructure& h, const Valuation& v,
                                  const HSet& p, const std::vector<BaseOrdering>& bases) {
  if (!compatibility_report(h, v, p).compatible()) {
    throw std::invalid_argument("ordering is not compatible with the valuation");
  }
  const val::ValuationRing ring = val::ring_from_valuation(h, v);
  const Valuation pi = val::valuation_from_hyperring(h, ring.o);
  const HSet frak_p = induced_residue_set(h, v, p);
  const BaseOrdering& base = base_for(bases, frak_p);
  std::vector<int> images(pi.group.order(), 0);
  for (Element a : h.nonzero()) {
    const std::size_t c = static_cast<std::size_t>((*pi.values[a])[0]);
    const int value = real::signature(h, base.ordering, a) * real::signature(h, p, a);
    if (images[c] != 0 && images[c] != value) {
      throw EquivalenceError("character is not well defined on the value of " + h.label(a));
    }
    images[c] = value;
  }
  Character chi{images};
  const auto all = characters_of(pi.group);
  if (std::find(all.begin(), all.end(), chi) == all.end()) {
    throw EquivalenceError("induced character is not a homomorphism");
  }
  return {frak_p, chi};
}

HSet baer_krull_inverse(const FiniteHyperstructure& h, const Valuation& v, const HSet& frak_p,
                        const Character& chi, const std::vector<BaseOrdering>& bases) {
  const val::ValuationRing ring = val::ring_from_valuation(h, v);
  const Valuation pi = val::valuation_from_hyperring(h, ring.o);
  const BaseOrdering& base = base_for(bases, frak_p);
  HSet p;
  for (Element x : h.nonzero()) {
    const int sign = chi(pi.group, *pi.values[x]);
    if ((sign == 1 && base.ordering.contains(x)) ||
        (sign == -1 && base.ordering.contains(h.neg(x)))) {
      p.insert(x);
    }
  }
  return p;
}

}  // namespace hfw::compat
