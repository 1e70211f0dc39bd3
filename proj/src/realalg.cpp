#include "hfw/realalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hfw::real {

namespace {

bool has_minus_one(const FiniteHyperstructure& h) { return h.one().has_value(); }

Element minus_one(const FiniteHyperstructure& h) { return h.neg(h.one_or_throw()); }

HSet saturate(const FiniteHyperstructure& h, HSet t) {
  while (true) {
    const HSet next = t | set_add(h, t, t) | set_mul(h, t, t);
    if (next == t) return t;
    t = next;
  }
}

void require_group(const FiniteHyperstructure& h) {
  if (!h.one()) throw std::invalid_argument(h.name() + " has no unity");
  for (Element x : h.nonzero()) {
    if (!h.inverse(x)) {
      throw std::invalid_argument(h.name() + ": element " + h.label(x) + " is not invertible");
    }
  }
}

}  // namespace

ViolationReport is_ordering(const FiniteHyperstructure& h, const HSet& p, std::size_t cap) {
  ViolationReport r(cap);
  if (p.contains(h.zero())) r.add("zero", {h.zero()}, "0 in P");
  for (Element a : p) {
    for (Element b : p) {
      const HSet s = h.add(a, b);
      if (!s.subset_of(p)) r.add("closure-add", {a, b}, h.format(s));
      if (!p.contains(h.mul(a, b))) r.add("closure-mul", {a, b});
    }
    if (p.contains(h.neg(a))) r.add("disjoint", {a}, "-" + h.label(a) + " in P");
  }
  const HSet covered = p | set_neg(h, p);
  for (Element x : h.nonzero() - covered) r.add("cover", {x});
  return r;
}

ViolationReport check_preordering(const FiniteHyperstructure& h, const HSet& t0) {
  ViolationReport r;
  HSet t = t0;
  t.erase(h.zero());
  for (Element a : t) {
    for (Element b : t) {
      const HSet s = h.add(a, b);
      if (!s.subset_of(t)) r.add("closure-add", {a, b}, h.format(s));
      if (!t.contains(h.mul(a, b))) r.add("closure-mul", {a, b});
    }
  }
  for (Element x : h.nonzero()) {
    if (!t.contains(h.mul(x, x))) r.add("squares", {x});
  }
  if (!h.one()) {
    r.add("minus-one", {}, "no unity");
  } else if (t.contains(minus_one(h))) {
    r.add("minus-one", {minus_one(h)});
  }
  return r;
}

bool is_preordering(const FiniteHyperstructure& h, const HSet& t) {
  return check_preordering(h, t).empty();
}

HSet nonzero_squares(const FiniteHyperstructure& h) {
  HSet s;
  for (Element x : h.nonzero()) s.insert(h.mul(x, x));
  return s;
}

std::vector<HSet> enumerate_orderings(const FiniteHyperstructure& h) {
  require_group(h);
  const Element one = h.one_or_throw();
  const HSet group = h.nonzero();

  std::vector<Element> gens;
  HSet span{one};
  for (Element x : group) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    while (true) {
      const HSet next = span | set_mul(h, span, HSet(gens.begin(), gens.end()));
      if (next == span) break;
      span = next;
    }
  }

  std::vector<HSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << gens.size()); ++bits) {
    std::map<Element, int> chi{{one, 1}};
    std::vector<Element> frontier{one};
    bool ok = true;
    while (ok && !frontier.empty()) {
      const Element x = frontier.back();
      frontier.pop_back();
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const Element y = h.mul(x, gens[i]);
        const int value = chi[x] * (((bits >> i) & 1U) ? -1 : 1);
        const auto [it, fresh] = chi.emplace(y, value);
        if (fresh) {
          frontier.push_back(y);
        } else if (it->second != value) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    HSet kernel;
    for (const auto& [x, v] : chi) {
      if (v == 1) kernel.insert(x);
    }
    if (kernel.contains(minus_one(h))) continue;
    if (is_ordering(h, kernel, 1).empty()) out.push_back(kernel);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HSet> enumerate_orderings_exhaustive(const FiniteHyperstructure& h) {
  const std::vector<Element> nz = h.nonzero().members();
  if (nz.size() > 20) throw std::invalid_argument("carrier too large for subset search");
  std::vector<HSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nz.size()); ++bits) {
    HSet p;
    for (std::size_t i = 0; i < nz.size(); ++i) {
      if ((bits >> i) & 1U) p.insert(nz[i]);
    }
    if (is_ordering(h, p, 1).empty()) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Realness is_real(const FiniteHyperstructure& h) {
  Realness r;
  if (!has_minus_one(h)) return r;
  const HSet squares = nonzero_squares(h);
  const Element m1 = minus_one(h);
  std::vector<HSet> seen;
  HSet current = squares;
  for (std::size_t length = 1;; ++length) {
    if (current.contains(m1) && !r.minus_one_length) r.minus_one_length = length;
    r.sums_of_squares = r.sums_of_squares | current;
    if (std::find(seen.begin(), seen.end(), current) != seen.end()) break;
    seen.push_back(current);
    current = set_add(h, current, squares);
  }
  r.real = !r.minus_one_length.has_value();
  return r;
}

HomomorphismSpec sign_hom(const FiniteHyperstructure& h, const HSet& p) {
  const ViolationReport bad = is_ordering(h, p);
  if (!bad.empty()) throw std::invalid_argument("not an ordering: " + bad.summary());
  const FiniteHyperstructure s = builtin::sign_hyperfield();
  const Element plus = s.index_of("1"), minus = s.index_of("-1");
  std::vector<Element> map(h.size(), s.zero());
  for (Element x : h.nonzero()) map[x] = p.contains(x) ? plus : minus;
  return HomomorphismSpec{h, s, map};
}

namespace {

void branch(const FiniteHyperstructure& h, const HSet& t, bool all, std::vector<HSet>& out) {
  const Element m1 = minus_one(h);
  for (Element x : h.nonzero()) {
    if (t.contains(x) || t.contains(h.neg(x))) continue;
    bool extended = false;
    for (Element choice : {x, h.neg(x)}) {
      const HSet next = saturate(h, t | HSet{choice});
      if (next.contains(m1) || next.contains(h.zero())) continue;
      branch(h, next, all, out);
      extended = true;
      if (!all) return;
    }
    if (!extended) {
      throw EquivalenceError("preordering admits neither " + h.label(x) + " nor its negative");
    }
    return;
  }
  if (!is_ordering(h, t, 1).empty()) {
    throw EquivalenceError("maximal preordering " + h.format(t) + " is not an ordering");
  }
  if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
}

}  // namespace

std::vector<HSet> maximal_preordering_extensions(const FiniteHyperstructure& h, const HSet& t0,
                                                 bool all) {
  const ViolationReport bad = check_preordering(h, t0);
  if (!bad.empty()) throw std::invalid_argument("not a preordering: " + bad.summary());
  HSet t = t0;
  t.erase(h.zero());
  std::vector<HSet> out;
  branch(h, t, all, out);
  std::sort(out.begin(), out.end());
  return out;
}

HSet compute_In(const FiniteHyperstructure& h, std::size_t n) {
  if (n == 0) throw std::invalid_argument("I_n needs n >= 1");
  return in_sequence(h).at(n);
}

const HSet& InSeq::at(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("I_n needs n >= 1");
  if (n <= sets.size()) return sets[n - 1];
  const std::size_t offset = (n - cycle_start) % cycle_length;
  return sets[cycle_start - 1 + offset];
}

InSeq in_sequence(const FiniteHyperstructure& h) {
  const HSet one{h.one_or_throw()};
  InSeq seq;
  HSet current = one;
  while (true) {
    const auto it = std::find(seq.sets.begin(), seq.sets.end(), current);
    if (it != seq.sets.end()) {
      seq.cycle_start = static_cast<std::size_t>(it - seq.sets.begin()) + 1;
      seq.cycle_length = seq.sets.size() + 1 - seq.cycle_start;
      return seq;
    }
    seq.sets.push_back(current);
    current = set_add(h, current, one);
  }
}

HSet A_of_P(const FiniteHyperstructure& h, const HSet& p, PmReading reading) {
  const InSeq seq = in_sequence(h);
  HSet out;
  for (Element a : h.carrier()) {
    for (const HSet& in : seq.sets) {
      const bool plus = set_add(h, in, HSet{a}).intersects(p);
      const bool minus = set_add(h, in, HSet{h.neg(a)}).intersects(p);
      if (reading == PmReading::both ? (plus && minus) : (plus || minus)) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

HSet I_of_P(const FiniteHyperstructure& h, const HSet& p, PmReading reading) {
  const InSeq seq = in_sequence(h);
  const HSet one{h.one_or_throw()};
  HSet out;
  for (Element a : h.carrier()) {
    bool member = true;
    for (const HSet& in : seq.sets) {
      const HSet scaled = set_mul(h, in, HSet{a});
      const bool plus = set_add(h, one, scaled).subset_of(p);
      const bool minus = set_add(h, one, set_neg(h, scaled)).subset_of(p);
      if (!(reading == PmReading::both ? (plus && minus) : (plus || minus))) {
        member = false;
        break;
      }
    }
    if (member) out.insert(a);
  }
  return out;
}

bool is_archimedean(const FiniteHyperstructure& h, const HSet& p) {
  return A_of_P(h, p) == h.carrier();
}

int signature(const FiniteHyperstructure& h, const HSet& p, Element a) {
  if (a == h.zero()) throw std::invalid_argument("signature of zero");
  if (!h.contains(a)) throw DomainError("element out of range");
  return p.contains(a) ? 1 : -1;
}

}  // namespace hfw::real
