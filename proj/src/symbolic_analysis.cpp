#include "hfw/symbolic_analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hfw/axioms.hpp"
#include "hfw/realalg.hpp"

namespace hfw::sym {

std::vector<SVElem> quantified_elements(int k, const Quantifier& q) {
  std::set<SVElem> all;
  for (const SVElem& x : window_elements(k, q.window)) all.insert(x);
  if (q.probes) {
    for (const SVElem& x : probe_elements(k)) all.insert(x);
  }
  return {all.begin(), all.end()};
}

namespace {

// Witness slots in ViolationReport hold carrier indices; symbolic witnesses
// go into the detail text instead.
std::string show(std::initializer_list<SVElem> xs) {
  std::string s;
  for (const SVElem& x : xs) s += (s.empty() ? "" : " ") + x.to_string();
  return s;
}

// (x + y) + z == x + (y + z). When a side is an infinite interval the sets
// are compared on the window through w in A + z <=> A meets w - z.
bool associative_at(const SignValueHyperfield& h, const SVElem& x, const SVElem& y,
                    const SVElem& z, const std::vector<SVElem>& window) {
  const SVSet xy = h.add(x, y), yz = h.add(y, z);
  try {
    return h.set_add(xy, SVSet::of(z)) == h.set_add(SVSet::of(x), yz);
  } catch (const std::domain_error&) {
  }
  return std::all_of(window.begin(), window.end(), [&](const SVElem& w) {
    return xy.intersects(h.add(w, -z)) == yz.intersects(h.add(w, -x));
  });
}

}  // namespace

ViolationReport check_axioms(const SignValueHyperfield& h, int window, std::size_t cap) {
  ViolationReport r(cap);
  const int k = h.rank();
  const std::vector<SVElem> e = window_elements(k, window);
  const SVElem zero = SVElem::zero(), one = h.one();
  for (const SVElem& x : e) {
    if (h.add(x, zero) != SVSet::of(x)) r.add("H3", {}, "x + 0 != {x} for " + show({x}));
    if (h.mul(x, one) != x) r.add("R3", {}, "1 x != x for " + show({x}));
    if (h.mul(x, zero) != zero) r.add("R2", {}, "0 x != 0 for " + show({x}));
    if (!x.is_zero() && h.mul(x, h.inv(x)) != one) r.add("group", {}, show({x}));
    for (const SVElem& y : e) {
      const SVSet xy = h.add(x, y);
      if (xy.empty()) r.add("nonempty", {}, show({x, y}));
      if (xy != h.add(y, x)) r.add("H2", {}, show({x, y}));
      if (xy.has_zero() != (y == -x)) r.add("H3", {}, "0 in x + y iff y = -x fails for " + show({x, y}));
      if (h.mul(x, y) != h.mul(y, x)) r.add("R1", {}, "commutativity " + show({x, y}));
      for (const SVElem& z : xy.members_within(k, window)) {
        if (!h.add(z, -x).contains(y)) r.add("H4", {}, show({x, y, z}));
      }
      for (const SVElem& z : e) {
        if (!associative_at(h, x, y, z, e)) r.add("H1", {}, show({x, y, z}));
        if (h.mul(h.mul(x, y), z) != h.mul(x, h.mul(y, z))) r.add("R1", {}, "associativity " + show({x, y, z}));
        if (h.set_mul(SVSet::of(z), xy) != h.add(h.mul(z, x), h.mul(z, y))) {
          r.add("R2", {}, "distributivity " + show({z, x, y}));
        }
      }
    }
  }
  return r;
}

ViolationReport is_ordering(const SignValueHyperfield& h, const SymbolicSubset& p,
                            const Quantifier& q) {
  ViolationReport r;
  const std::vector<SVElem> e = quantified_elements(h.rank(), q);
  if (p.contains(SVElem::zero())) r.add("zero", {}, "0 in " + p.name);
  std::vector<SVElem> positive;
  for (const SVElem& x : e) {
    if (x.is_zero()) continue;
    if (p.contains(x)) positive.push_back(x);
    const bool in = p.contains(x), neg_in = p.contains(-x);
    if (in && neg_in) r.add("disjoint", {}, show({x}));
    if (!in && !neg_in) r.add("cover", {}, show({x}));
  }
  for (const SVElem& a : positive) {
    for (const SVElem& b : positive) {
      const SVSet s = h.add(a, b);
      if (!subset_of(s, p)) r.add("closure-add", {}, show({a, b}) + " -> " + s.to_string());
      if (!p.contains(h.mul(a, b))) r.add("closure-mul", {}, show({a, b}));
    }
  }
  return r;
}

std::vector<SignCharacter> enumerate_orderings(const SignValueHyperfield& h, const Quantifier& q) {
  std::vector<SignCharacter> out;
  for (const SignCharacter& chi : all_characters(h.rank())) {
    if (is_ordering(h, character_ordering(chi), q).empty()) out.push_back(chi);
  }
  return out;
}

bool sums_of_squares_avoid_minus_one(const SignValueHyperfield& h, int window) {
  const int k = h.rank();
  std::set<SVElem> sums;
  for (const SVElem& x : window_elements(k, window)) {
    if (!x.is_zero()) sums.insert(h.mul(x, x));
  }
  const std::set<SVElem> squares = sums;
  std::size_t before = 0;
  while (before != sums.size()) {
    before = sums.size();
    const std::vector<SVElem> current(sums.begin(), sums.end());
    for (const SVElem& a : current) {
      for (const SVElem& s : squares) {
        for (const SVElem& c : h.add(a, s).members_within(k, window)) sums.insert(c);
      }
    }
  }
  return sums.count(-h.one()) == 0;
}

ViolationReport check_preordering(const SignValueHyperfield& h, const SymbolicSubset& t,
                                  const Quantifier& q) {
  ViolationReport r;
  const std::vector<SVElem> e = quantified_elements(h.rank(), q);
  std::vector<SVElem> members;
  for (const SVElem& x : e) {
    if (!x.is_zero() && t.contains(x)) members.push_back(x);
    if (!x.is_zero() && !t.contains(h.mul(x, x))) r.add("squares", {}, show({x}));
  }
  if (t.contains(-h.one())) r.add("minus-one", {}, "-1 in " + t.name);
  for (const SVElem& a : members) {
    for (const SVElem& b : members) {
      SVSet s = h.add(a, b);
      if (!subset_of(s, t)) r.add("closure-add", {}, show({a, b}));
      if (!t.contains(h.mul(a, b))) r.add("closure-mul", {}, show({a, b}));
    }
  }
  return r;
}

SymInSeq in_sequence(const SignValueHyperfield& h, std::size_t max_steps) {
  SymInSeq seq;
  const SVSet one = SVSet::of(h.one());
  SVSet current = one;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const auto it = std::find(seq.sets.begin(), seq.sets.end(), current);
    if (it != seq.sets.end()) {
      seq.cycle_start = static_cast<std::size_t>(it - seq.sets.begin()) + 1;
      seq.cycle_length = seq.sets.size() + 1 - seq.cycle_start;
      return seq;
    }
    seq.sets.push_back(current);
    current = h.set_add(current, one);
  }
  throw std::runtime_error("I_n did not become periodic");
}

bool in_A(const SignValueHyperfield& h, const SymInSeq& seq, const SymbolicSubset& p,
          const SVElem& a) {
  for (const SVSet& in : seq.sets) {
    if (meets(h.set_add(in, SVSet::of(a)), p) && meets(h.set_add(in, SVSet::of(-a)), p)) {
      return true;
    }
  }
  return false;
}

bool in_I(const SignValueHyperfield& h, const SymInSeq& seq, const SymbolicSubset& p,
          const SVElem& a) {
  const SVSet one = SVSet::of(h.one());
  for (const SVSet& in : seq.sets) {
    const SVSet scaled = h.set_mul(in, SVSet::of(a));
    if (!subset_of(h.set_add(one, scaled), p) || !subset_of(h.set_add(one, h.set_neg(scaled)), p)) {
      return false;
    }
  }
  return true;
}

HullComparison compare_hull(const SignValueHyperfield& h, const SymbolicSubset& p,
                            const SymbolicSubset& expected_a, const SymbolicSubset& expected_i,
                            const Quantifier& q) {
  const SymInSeq seq = in_sequence(h);
  HullComparison out;
  for (const SVElem& a : quantified_elements(h.rank(), q)) {
    ++out.checked;
    if (in_A(h, seq, p, a) != expected_a.contains(a)) out.a_mismatches.push_back(a);
    if (in_I(h, seq, p, a) != expected_i.contains(a)) out.i_mismatches.push_back(a);
  }
  return out;
}

std::optional<Value> SymValuation::operator()(const SVElem& x) const {
  if (custom) return custom(x);
  if (x.is_zero()) return std::nullopt;
  if (static_cast<std::size_t>(level) > x.value.size()) throw std::invalid_argument("level exceeds rank");
  return Value(x.value.begin(), x.value.begin() + level);
}

namespace {

using OptValue = std::optional<Value>;

bool leq_inf(const OptValue& a, const OptValue& b) {
  if (!b) return true;
  if (!a) return false;
  return *a <= *b;
}

OptValue add_inf(const OptValue& a, const OptValue& b) {
  if (!a || !b) return std::nullopt;
  return add_values(*a, *b);
}

}  // namespace

ViolationReport is_valuation(const SignValueHyperfield& h, const SymValuation& v,
                             const Quantifier& q) {
  ViolationReport r;
  const std::vector<SVElem> e = quantified_elements(h.rank(), q);
  for (const SVElem& a : e) {
    if (a.is_zero() != !v(a).has_value()) r.add("V1", {}, show({a}));
  }
  if (!r.empty()) return r;
  const OptValue zero = v(h.one());
  if (v(h.one()) != v(-h.one()) || (zero && std::any_of(zero->begin(), zero->end(), [](auto c) { return c != 0; }))) {
    r.add("unit", {}, "v(1) or v(-1) is not 0");
  }
  for (const SVElem& a : e) {
    if (v(-a) != v(a)) r.add("neg", {}, show({a}));
    if (!a.is_zero() && v(h.inv(a)) != OptValue(negate_value(*v(a)))) r.add("inverse", {}, show({a}));
    for (const SVElem& b : e) {
      if (v(h.mul(a, b)) != add_inf(v(a), v(b))) r.add("V2", {}, show({a, b}));
      const OptValue lo = leq_inf(v(a), v(b)) ? v(a) : v(b);
      const SVSet s = h.add(a, b);
      // Every member of a tail has value at least the value of its start.
      std::vector<SVElem> lowest(s.points().begin(), s.points().end());
      for (int sign : {1, -1}) {
        if (s.tail_from(sign)) lowest.push_back({sign, *s.tail_from(sign)});
      }
      if (s.has_zero()) lowest.push_back(SVElem::zero());
      for (const SVElem& c : lowest) {
        if (!leq_inf(lo, v(c))) r.add("V3", {}, show({a, b, c}));
      }
      if (v(a) != v(b)) {
        const bool exact = s.finite() && !s.has_zero() &&
                           std::all_of(s.points().begin(), s.points().end(),
                                       [&](const SVElem& c) { return v(c) == lo; });
        if (!exact) r.add("V3-strict", {}, show({a, b}) + " -> " + s.to_string());
      }
    }
  }
  return r;
}

ViolationReport is_valuation_hyperring(const SignValueHyperfield& h, const SymbolicSubset& o,
                                       const Quantifier& q) {
  ViolationReport r;
  const std::vector<SVElem> e = quantified_elements(h.rank(), q);
  if (!o.contains(SVElem::zero())) r.add("zero", {}, "0 not in " + o.name);
  std::vector<SVElem> members;
  for (const SVElem& x : e) {
    if (o.contains(x)) members.push_back(x);
    if (!x.is_zero() && !o.contains(x) && !o.contains(h.inv(x))) r.add("valuation", {}, show({x}));
  }
  for (const SVElem& a : members) {
    if (!o.contains(-a)) r.add("subhyperring", {}, "negation " + show({a}));
    for (const SVElem& b : members) {
      if (!o.contains(h.mul(a, b))) r.add("subhyperring", {}, "product " + show({a, b}));
      const SVSet s = h.add(a, b);
      if (!meets(s, o)) r.add("subhyperring", {}, "empty trace " + show({a, b}));
      if (!subset_of(h.add(a, -b), o)) r.add("strict", {}, show({a, b}));
    }
  }
  return r;
}

RoundTrip valuation_round_trip(const SignValueHyperfield& h, const SymValuation& v,
                               const Quantifier& q) {
  RoundTrip out;
  const SymbolicSubset o = v.ring();
  const std::vector<SVElem> e = quantified_elements(h.rank(), q);
  // pi(a) <= pi(b) iff b / a in O; pi(a) = pi(b) iff b / a is a unit of O.
  auto pi_leq = [&](const SVElem& a, const SVElem& b) { return o.contains(h.mul(b, h.inv(a))); };
  for (const SVElem& a : e) {
    if (a.is_zero()) continue;
    const bool in_o_pi = pi_leq(h.one(), a);
    if (in_o_pi != o.contains(a)) {
      out.ring_recovered = false;
      out.failures.push_back("O_pi differs at " + a.to_string());
    }
    for (const SVElem& b : e) {
      if (b.is_zero()) continue;
      if (pi_leq(a, b) != leq_inf(v(a), v(b))) {
        out.order_recovered = false;
        out.failures.push_back("order differs at " + show({a, b}));
      }
    }
  }
  return out;
}

namespace {

bool is_zero_value(const Value& v) {
  return std::all_of(v.begin(), v.end(), [](auto c) { return c == 0; });
}

}  // namespace

Element SymResidue::class_of(const SVElem& x) const {
  if (x.is_zero()) return structure.zero();
  const Value zero(x.value.size(), 0);
  if (zero < x.value) return structure.zero();
  if (x.value != zero) throw std::invalid_argument(x.to_string() + " is outside O_v");
  for (Element i = 0; i < representatives.size(); ++i) {
    if (representatives[i] == x) return i;
  }
  return 1;  // (-,0) merged with (+,0)
}

SymResidue residue(const SignValueHyperfield& h, const Quantifier& q) {
  const int k = h.rank();
  const SymbolicSubset m = value_cut(k, true);
  const SVElem plus = h.one(), minus = -h.one();
  const bool merged = meets(h.add(plus, plus), m);  // plus - minus meets M

  std::vector<SVElem> reps{SVElem::zero(), plus};
  if (!merged) reps.push_back(minus);
  auto cls = [&](const SVElem& x) -> Element {
    if (x.is_zero() || m.contains(x)) return 0;
    if (!is_zero_value(x.value)) throw EquivalenceError(x.to_string() + " left O_v");
    return (x.sign > 0 || merged) ? 1 : 2;
  };
  auto classes_of = [&](const SVSet& s) {
    HSet out;
    if (s.has_zero()) out.insert(0);
    for (const SVElem& x : s.points()) out.insert(cls(x));
    for (int sign : {1, -1}) {
      if (!s.tail_from(sign)) continue;
      const Value& from = *s.tail_from(sign);
      if (Value(from.size(), 0) < from || from == Value(from.size(), 0)) {
        out.insert(0);  // a tail always reaches M
        if (is_zero_value(from)) out.insert(cls({sign, from}));
      } else {
        throw EquivalenceError("sum leaves O_v: " + s.to_string());
      }
    }
    return out;
  };

  // Members of each class inside the window, used to test that sums and
  // products do not depend on the representative.
  std::vector<std::vector<SVElem>> members(reps.size());
  for (const SVElem& x : window_elements(k, q.window)) {
    if (x.is_zero() || m.contains(x) || is_zero_value(x.value)) members[cls(x)].push_back(x);
  }

  const std::size_t n = reps.size();
  std::vector<std::string> labels;
  std::vector<Element> neg(n);
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  std::vector<std::vector<HSet>> add(n, std::vector<HSet>(n));
  for (Element i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "M" : (merged ? "(+-,0)+M" : reps[i].to_string() + "+M"));
    neg[i] = cls(-reps[i]);
    for (Element j = 0; j < n; ++j) {
      mul[i][j] = cls(h.mul(reps[i], reps[j]));
      add[i][j] = classes_of(h.add(reps[i], reps[j]));
      for (const SVElem& x : members[i]) {
        for (const SVElem& y : members[j]) {
          if (classes_of(h.add(x, y)) != add[i][j] || cls(h.mul(x, y)) != mul[i][j]) {
            throw EquivalenceError("residue operations depend on representatives: " +
                                   show({x, y}));
          }
        }
      }
    }
  }
  // The relation (x - y) meets M must reproduce these classes.
  for (const SVElem& x : window_elements(k, q.window)) {
    if (!(x.is_zero() || m.contains(x) || is_zero_value(x.value))) continue;
    for (const SVElem& y : window_elements(k, q.window)) {
      if (!(y.is_zero() || m.contains(y) || is_zero_value(y.value))) continue;
      if (meets(h.add(x, -y), m) != (cls(x) == cls(y))) {
        throw EquivalenceError("residue classes disagree with the relation at " + show({x, y}));
      }
    }
  }
  FiniteHyperstructure s(h.name() + "/M", labels, 0, Element{1}, neg, mul, add);
  const ViolationReport bad = check_hyperfield(s);
  if (!bad.empty()) throw EquivalenceError("residue is not a hyperfield: " + bad.summary());
  return {s, reps};
}

bool SymCompatReport::agree() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](const SymCondition& c) { return c.holds == conditions[0].holds; });
}

void SymCompatReport::require_agreement() const {
  if (agree()) return;
  std::string s = "compatibility conditions disagree:";
  for (const SymCondition& c : conditions) s += c.holds ? " T" : " F";
  throw EquivalenceError(s);
}

HSet induced_residue_set(const SignValueHyperfield& h, const SymResidue& r,
                         const SymbolicSubset& p) {
  HSet out;
  for (int sign : {1, -1}) {
    const SVElem u = make_elem(sign, zero_value(h.rank()));
    if (p.contains(u)) out.insert(r.class_of(u));
  }
  return out;
}

SymCompatReport compatibility_report(const SignValueHyperfield& h, const SymValuation& v,
                                     const SymbolicSubset& p, const Quantifier& q) {
  const int k = h.rank();
  if (v.level != 0 && v.level != k) {
    throw std::invalid_argument("compatibility needs the trivial or the full-rank valuation");
  }
  const ViolationReport bad = is_ordering(h, p, q);
  if (!bad.empty()) throw std::invalid_argument("not an ordering: " + bad.summary());
  const std::vector<SVElem> e = quantified_elements(k, q);
  const SymbolicSubset o = v.ring(), m = v.ideal();
  SymCompatReport r;

  const SymInSeq seq = in_sequence(h);
  for (const SVElem& a : e) {
    if (!o.contains(a) && in_A(h, seq, p, a)) {
      r.conditions[0] = {false, {a}, a.to_string() + " in A(P) but not in O_v"};
      break;
    }
  }

  if (v.level == 0) {
    // The residue is F itself and the induced set is P.
    r.conditions[1].holds = is_ordering(h, p, q).empty();
  } else {
    const SymResidue res = residue(h, q);
    const HSet induced = induced_residue_set(h, res, p);
    const ViolationReport ord = real::is_ordering(res.structure, induced, 1);
    if (!ord.empty()) {
      r.conditions[1] = {false, {}, "induced set " + res.structure.format(induced) + " fails " +
                                        ord.axioms().front()};
    }
  }

  const SVElem one = h.one();
  for (const SVElem& x : e) {
    if (!m.contains(x)) continue;
    const SVSet s = h.add(one, x);
    if (!subset_of(s, p)) {
      SVElem out = x;
      for (const SVElem& c : s.members_within(k, q.window)) {
        if (!p.contains(c)) {
          out = c;
          break;
        }
      }
      r.conditions[2] = {false, {x, out}, "1 + " + x.to_string() + " = " + s.to_string() + " leaves P"};
      break;
    }
    // The same for the whole tail of M starting at x.
    if (!x.is_zero() && !subset_of(h.add_point_tail(one, x.sign, x.value), p)) {
      r.conditions[2] = {false, {x}, "1 + tail from " + x.to_string() + " leaves P"};
      break;
    }
  }

  for (const SVElem& a : e) {
    bool found = false;
    for (const SVElem& b : e) {
      if (meets(h.add(b, a), p) && meets(h.add(b, -a), p) && !leq_inf(v(b), v(a))) {
        r.conditions[3] = {false, {a, b}, "b + a and b - a meet P but v(a) < v(b)"};
        found = true;
        break;
      }
    }
    if (found) break;
  }
  return r;
}

SymConvexity convexity_check(const SignValueHyperfield& h, const SymbolicSubset& p,
                             const SymbolicSubset& o, int window) {
  const std::vector<SVElem> e = window_elements(h.rank(), window);
  auto less = [&](const SVElem& a, const SVElem& b) { return subset_of(h.add(b, -a), p); };
  SymConvexity out;
  for (const SVElem& x : e) {
    if (o.contains(x)) continue;
    for (const SVElem& a : e) {
      if (!o.contains(a)) continue;
      const bool below = less(a, x);
      for (const SVElem& b : e) {
        if (!o.contains(b)) continue;
        ++out.triples;
        if (below && less(x, b)) {
          out.convex = false;
          out.violations.push_back({a, x, b});
        }
      }
    }
  }
  return out;
}

namespace {

bool all_even(const Value& v) {
  return std::all_of(v.begin(), v.end(), [](auto c) { return c % 2 == 0; });
}

}  // namespace

SymbolicSubset lifting_preordering(const SignValueHyperfield& h, const SymResidue& r,
                                   const HSet& frak_p) {
  const int k = h.rank();
  std::array<bool, 2> allowed{};
  for (int sign : {1, -1}) {
    allowed[sign > 0 ? 0 : 1] = frak_p.contains(r.class_of(make_elem(sign, zero_value(k))));
  }
  SymbolicSubset t;
  t.name = "T";
  t.contains = [allowed](const SVElem& x) {
    return !x.is_zero() && all_even(x.value) && allowed[x.sign > 0 ? 0 : 1];
  };
  t.contains_tail = [](int, const Value&) { return false; };
  t.meets_tail = [allowed](int sign, const Value&) { return allowed[sign > 0 ? 0 : 1]; };
  return t;
}

std::vector<SVElem> lifting_preordering_mismatches(const SignValueHyperfield& h,
                                                   const SymResidue& r, const HSet& frak_p,
                                                   int window) {
  const int k = h.rank();
  const SymbolicSubset t = lifting_preordering(h, r, frak_p);
  const std::vector<SVElem> wide = window_elements(k, 2 * window);
  std::vector<SVElem> out;
  for (const SVElem& a : window_elements(k, window)) {
    bool member = false;
    for (const SVElem& x : wide) {
      if (x.is_zero()) continue;
      const SVElem y = h.mul(a, h.mul(x, x));
      if (!y.is_zero() && is_zero_value(y.value) && frak_p.contains(r.class_of(y))) {
        member = true;
        break;
      }
    }
    if (member != t.contains(a)) out.push_back(a);
  }
  return out;
}

namespace {

void branch(const SignValueHyperfield& h, const SymbolicSubset& t, std::vector<int>& images,
            bool all, const Quantifier& q, std::vector<SignCharacter>& out) {
  const int k = h.rank();
  const int i = static_cast<int>(images.size());
  if (i == k) {
    out.push_back(SignCharacter{images});
    return;
  }
  for (int choice : {1, -1}) {
    images.push_back(choice);
    // Saturating T with (choice, e_i) and the earlier choices yields the
    // elements whose sign is fixed by the partial character; it must stay
    // inside an ordering, so reject the branch once it contradicts T.
    bool consistent = true;
    for (const SVElem& x : quantified_elements(k, q)) {
      if (x.is_zero() || !t.contains(x)) continue;
      int expected = 1;
      for (int j = 0; j <= i; ++j) {
        if (images[j] == -1 && x.value[j] % 2 != 0) expected = -expected;
      }
      bool determined = true;
      for (int j = i + 1; j < k; ++j) determined = determined && x.value[j] % 2 == 0;
      if (determined && x.sign != expected) consistent = false;
    }
    if (consistent) {
      const std::size_t before = out.size();
      branch(h, t, images, all, q, out);
      if (!all && out.size() > before) {
        images.pop_back();
        return;
      }
    }
    images.pop_back();
  }
}

}  // namespace

std::vector<SignCharacter> lift_ordering(const SignValueHyperfield& h, const SymResidue& r,
                                         const HSet& frak_p, bool all, const Quantifier& q) {
  const ViolationReport bad = real::is_ordering(r.structure, frak_p);
  if (!bad.empty()) throw std::invalid_argument("not a residue ordering: " + bad.summary());
  const SymbolicSubset t = lifting_preordering(h, r, frak_p);
  const ViolationReport pre = check_preordering(h, t, q);
  if (!pre.empty()) throw EquivalenceError("lifting set is not a preordering: " + pre.summary());

  std::vector<SignCharacter> leaves;
  std::vector<int> images;
  branch(h, t, images, true, q, leaves);
  std::vector<SignCharacter> out;
  for (const SignCharacter& chi : leaves) {
    const SymbolicSubset p = character_ordering(chi);
    if (!is_ordering(h, p, q).empty()) continue;
    bool contains_t = true;
    for (const SVElem& x : quantified_elements(h.rank(), q)) {
      if (t.contains(x) && !p.contains(x)) contains_t = false;
    }
    if (!contains_t) continue;
    if (!compatibility_report(h, SymValuation{h.rank(), {}}, p, q).compatible()) {
      throw EquivalenceError("lifted ordering " + p.name + " is not compatible");
    }
    if (induced_residue_set(h, r, p) != frak_p) {
      throw EquivalenceError("lifted ordering " + p.name + " induces another residue ordering");
    }
    out.push_back(chi);
    if (!all) break;
  }
  return out;
}

SymBaerKrullImage baer_krull_forward(const SignValueHyperfield& h, const SymResidue& r,
                                     const SignCharacter& p, const SignCharacter& base,
                                     const Quantifier& q) {
  const int k = h.rank();
  const SymbolicSubset pp = character_ordering(p), pb = character_ordering(base);
  const SymValuation v{k, {}};
  if (!compatibility_report(h, v, pp, q).compatible()) {
    throw std::invalid_argument("ordering is not compatible with the valuation");
  }
  auto sgn = [](const SymbolicSubset& s, const SVElem& a) { return s.contains(a) ? 1 : -1; };
  std::map<Value, int> chi;
  const std::vector<SVElem> e = quantified_elements(k, q);
  for (const SVElem& a : e) {
    if (a.is_zero()) continue;
    const int value = sgn(pb, a) * sgn(pp, a);
    const auto [it, fresh] = chi.emplace(*v(a), value);
    if (!fresh && it->second != value) {
      throw EquivalenceError("character is not well defined at " + a.to_string());
    }
  }
  SignCharacter c;
  for (int i = 0; i < k; ++i) c.images.push_back(chi.at(unit_vector(k, i)));
  for (const auto& [g1, s1] : chi) {
    if (c(g1) != s1) throw EquivalenceError("character is not determined by generators");
    for (const auto& [g2, s2] : chi) {
      const auto it = chi.find(add_values(g1, g2));
      if (it != chi.end() && it->second != s1 * s2) {
        throw EquivalenceError("character is not multiplicative");
      }
    }
  }
  return {induced_residue_set(h, r, pp), c};
}

SignCharacter baer_krull_inverse(const SignValueHyperfield& h, const SignCharacter& chi,
                                 const SignCharacter& base, const Quantifier& q) {
  const int k = h.rank();
  const SymbolicSubset pb = character_ordering(base);
  const SymValuation v{k, {}};
  auto member = [&](const SVElem& x) {
    if (x.is_zero()) return false;
    const int s = chi(*v(x));
    return (s == 1 && pb.contains(x)) || (s == -1 && pb.contains(-x));
  };
  const std::vector<SVElem> e = quantified_elements(k, q);
  for (const SignCharacter& c : all_characters(k)) {
    const SymbolicSubset candidate = character_ordering(c);
    if (std::all_of(e.begin(), e.end(),
                    [&](const SVElem& x) { return member(x) == candidate.contains(x); })) {
      return c;
    }
  }
  throw EquivalenceError("constructed set is not a character ordering");
}

bool residue_ordering_archimedean(const SignValueHyperfield& h, const SymbolicSubset& p,
                                  const Quantifier& q) {
  const int k = h.rank();
  const SymInSeq seq = in_sequence(h);
  const std::vector<SVElem> e = quantified_elements(k, q);
  const SymbolicSubset full = value_cut(0, false), zero = value_cut(0, true);
  const SymbolicSubset o = value_cut(k, false), m = value_cut(k, true);
  bool is_full = true, is_o = true, i_zero = true, i_m = true;
  for (const SVElem& a : e) {
    const bool in_a = in_A(h, seq, p, a), in_i = in_I(h, seq, p, a);
    is_full = is_full && in_a == full.contains(a);
    is_o = is_o && in_a == o.contains(a);
    i_zero = i_zero && in_i == zero.contains(a);
    i_m = i_m && in_i == m.contains(a);
  }
  if (is_full) {
    // Trivial natural valuation: the residue is F with P, and A(P) = F.
    if (!i_zero) throw EquivalenceError("I(P) is not {0} although A(P) = F");
    return true;
  }
  if (!is_o || !i_m) throw EquivalenceError("A(P) is neither F nor the full-rank valuation ring");
  const SymResidue res = residue(h, q);
  const HSet induced = induced_residue_set(h, res, p);
  if (!real::is_ordering(res.structure, induced).empty()) {
    throw EquivalenceError("P does not induce an ordering on A(P)/I(P)");
  }
  return real::is_archimedean(res.structure, induced);
}

InducedFinite induce_finite(const SignValueHyperfield& h, const std::vector<SVElem>& members) {
  const std::size_t n = members.size();
  auto index = [&](const SVElem& x) -> std::optional<Element> {
    for (Element i = 0; i < n; ++i) {
      if (members[i] == x) return i;
    }
    return std::nullopt;
  };
  InducedFinite out;
  std::vector<std::string> labels;
  std::vector<Element> neg(n);
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  std::vector<std::vector<HSet>> add(n, std::vector<HSet>(n));
  const auto zero = index(SVElem::zero());
  if (!zero) throw std::invalid_argument("0 must be a member");
  bool closed = true;
  for (Element i = 0; i < n; ++i) {
    labels.push_back(members[i].to_string());
    const auto ni = index(-members[i]);
    if (!ni) {
      closed = false;
      continue;
    }
    neg[i] = *ni;
    for (Element j = 0; j < n; ++j) {
      const auto mij = index(h.mul(members[i], members[j]));
      if (!mij) {
        closed = false;
        continue;
      }
      mul[i][j] = *mij;
      const SVSet s = h.add(members[i], members[j]);
      for (Element c = 0; c < n; ++c) {
        if (s.contains(members[c])) add[i][j].insert(c);
      }
      if (add[i][j].empty()) closed = false;
      if (out.strict) {
        const SVSet d = h.add(members[i], -members[j]);
        bool inside = d.finite();
        for (const SVElem& x : d.points()) inside = inside && index(x).has_value();
        if (d.has_zero()) inside = inside && zero.has_value();
        if (!inside) {
          out.strict = false;
          out.strictness_witness = std::array<SVElem, 2>{members[i], members[j]};
        }
      }
    }
  }
  if (!closed) return out;
  std::optional<Element> one = index(h.one());
  FiniteHyperstructure s(h.name() + "|S", labels, *zero, one, neg, mul, add);
  if (check_hyperring(s, 1).empty()) out.structure = s;
  return out;
}

}  // namespace hfw::sym
