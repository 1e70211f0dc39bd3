#include "hfw/valtheory.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hfw/axioms.hpp"

namespace hfw::val {

ValueGroup ValueGroup::lex(int k) {
  if (k < 0) throw std::invalid_argument("negative rank");
  ValueGroup g;
  g.kind_ = Kind::lex;
  g.rank_ = k;
  return g;
}

ValueGroup ValueGroup::quotient(std::vector<std::vector<std::size_t>> op,
                                std::vector<std::vector<bool>> leq, std::size_t identity,
                                std::vector<std::string> names) {
  const std::size_t n = op.size();
  if (n == 0 || leq.size() != n || names.size() != n || identity >= n) {
    throw std::invalid_argument("inconsistent quotient group presentation");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (op[i].size() != n || leq[i].size() != n) throw std::invalid_argument("ragged table");
    for (std::size_t j : op[i]) {
      if (j >= n) throw std::invalid_argument("operation leaves the group");
    }
  }
  ValueGroup g;
  g.kind_ = Kind::quotient;
  g.rank_ = 0;
  g.op_ = std::move(op);
  g.leq_ = std::move(leq);
  g.identity_ = identity;
  g.names_ = std::move(names);
  return g;
}

void ValueGroup::check_element(const GroupElement& a) const {
  if (kind_ == Kind::lex) {
    if (a.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("rank mismatch");
  } else if (a.size() != 1 || a[0] < 0 || static_cast<std::size_t>(a[0]) >= op_.size()) {
    throw std::invalid_argument("not a coset index");
  }
}

GroupElement ValueGroup::identity() const {
  if (kind_ == Kind::lex) return GroupElement(static_cast<std::size_t>(rank_), 0);
  return {static_cast<std::int64_t>(identity_)};
}

GroupElement ValueGroup::add(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  if (kind_ == Kind::lex) {
    GroupElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
  }
  return {static_cast<std::int64_t>(op_[a[0]][b[0]])};
}

GroupElement ValueGroup::negate(const GroupElement& a) const {
  check_element(a);
  if (kind_ == Kind::lex) {
    GroupElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
  }
  for (std::size_t j = 0; j < op_.size(); ++j) {
    if (op_[a[0]][j] == identity_) return {static_cast<std::int64_t>(j)};
  }
  throw std::invalid_argument("element without inverse");
}

bool ValueGroup::leq(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  if (kind_ == Kind::lex) return a <= b;
  return leq_[a[0]][b[0]];
}

std::string ValueGroup::format(const GroupElement& a) const {
  check_element(a);
  if (kind_ == Kind::quotient) return names_[a[0]];
  std::string s = a.size() == 1 ? "" : "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return a.size() == 1 ? s : s + ")";
}

ViolationReport ValueGroup::check() const {
  ViolationReport r;
  if (kind_ == Kind::lex) return r;
  const std::size_t n = op_.size();
  auto e = [](std::size_t i) { return static_cast<Element>(i); };
  for (std::size_t a = 0; a < n; ++a) {
    if (op_[a][identity_] != a) r.add("identity", {e(a)});
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (op_[a][b] == identity_) has_inverse = true;
      if (op_[a][b] != op_[b][a]) r.add("commutative", {e(a), e(b)});
      if (!leq_[a][b] && !leq_[b][a]) r.add("total", {e(a), e(b)});
      if (a != b && leq_[a][b] && leq_[b][a]) r.add("antisymmetric", {e(a), e(b)});
      for (std::size_t c = 0; c < n; ++c) {
        if (op_[op_[a][b]][c] != op_[a][op_[b][c]]) r.add("associative", {e(a), e(b), e(c)});
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) r.add("transitive", {e(a), e(b), e(c)});
        if (leq_[a][b] && !leq_[op_[a][c]][op_[b][c]]) r.add("translation", {e(a), e(b), e(c)});
      }
    }
    if (!has_inverse) r.add("inverse", {e(a)});
  }
  return r;
}

Valuation trivial_valuation(const FiniteHyperstructure& h) {
  Valuation v{ValueGroup::lex(1), {}};
  for (Element x : h.carrier()) {
    v.values.push_back(x == h.zero() ? std::nullopt : std::optional<GroupElement>(GroupElement{0}));
  }
  return v;
}

namespace {

using Value = std::optional<GroupElement>;

// Order on the group with infinity on top.
bool leq_inf(const ValueGroup& g, const Value& a, const Value& b) {
  if (!b) return true;
  if (!a) return false;
  return g.leq(*a, *b);
}

bool eq_inf(const ValueGroup& g, const Value& a, const Value& b) {
  return leq_inf(g, a, b) && leq_inf(g, b, a);
}

Value add_inf(const ValueGroup& g, const Value& a, const Value& b) {
  if (!a || !b) return std::nullopt;
  return g.add(*a, *b);
}

}  // namespace

ViolationReport is_valuation(const FiniteHyperstructure& h, const Valuation& v, std::size_t cap) {
  ViolationReport r(cap);
  if (v.values.size() != h.size()) {
    r.add("V1", {}, "value table has the wrong length");
    return r;
  }
  const ValueGroup& g = v.group;
  r.merge(g.check());
  auto val = [&](Element x) -> const Value& { return v.values[x]; };
  for (Element x : h.carrier()) {
    if ((x == h.zero()) != !val(x).has_value()) r.add("V1", {x});
  }
  if (!r.empty()) return r;
  for (Element a : h.carrier()) {
    for (Element b : h.carrier()) {
      if (!eq_inf(g, val(h.mul(a, b)), add_inf(g, val(a), val(b)))) r.add("V2", {a, b});
      const Value& lo = leq_inf(g, val(a), val(b)) ? val(a) : val(b);
      const bool distinct = !eq_inf(g, val(a), val(b));
      for (Element c : h.add(a, b)) {
        if (!leq_inf(g, lo, val(c))) r.add("V3", {a, b, c});
        if (distinct && !eq_inf(g, lo, val(c))) r.add("V3-strict", {a, b, c});
      }
    }
    if (!eq_inf(g, val(h.neg(a)), val(a))) r.add("neg", {a});
    if (a != h.zero()) {
      if (const auto inv = h.inverse(a); inv && !eq_inf(g, val(*inv), g.negate(*val(a)))) {
        r.add("inverse", {a, *inv});
      }
    }
  }
  if (h.one()) {
    const Element one = *h.one();
    if (!eq_inf(g, val(one), g.identity())) r.add("unit", {one});
    if (!eq_inf(g, val(h.neg(one)), g.identity())) r.add("unit", {h.neg(one)});
  }
  return r;
}

ViolationReport is_valuation_hyperring(const FiniteHyperstructure& h, const HSet& o) {
  ViolationReport r;
  if (!o.contains(h.zero())) {
    r.add("zero", {h.zero()});
    return r;
  }
  if (!induced_subhyperring(h, o)) r.add("subhyperring", {}, h.format(o));
  for (Element x : h.nonzero()) {
    const auto inv = h.inverse(x);
    if (!inv) {
      r.add("valuation", {x}, "not invertible");
    } else if (!o.contains(x) && !o.contains(*inv)) {
      r.add("valuation", {x, *inv});
    }
  }
  for (Element a : o) {
    for (Element b : o) {
      if (!hyper_add(h, a, h.neg(b)).subset_of(o)) r.add("strict", {a, b});
    }
  }
  return r;
}

UnitsAndIdeal units_and_maximal_ideal(const FiniteHyperstructure& h, const HSet& o) {
  const ViolationReport bad = is_valuation_hyperring(h, o);
  if (!bad.empty()) throw std::invalid_argument("not a valuation hyperring: " + bad.summary());
  UnitsAndIdeal out;
  for (Element x : o) {
    if (x == h.zero()) continue;
    if (o.contains(*h.inverse(x))) out.units.insert(x);
  }
  out.maximal = o - out.units;
  return out;
}

LocalRing local_ring(const FiniteHyperstructure& h, const HSet& o) {
  const UnitsAndIdeal um = units_and_maximal_ideal(h, o);
  auto ring = induced_subhyperring(h, o);
  if (!ring) throw EquivalenceError("valuation hyperring is not a subhyperring");
  HSet m;
  for (Element i = 0; i < ring->embedding.size(); ++i) {
    if (um.maximal.contains(ring->embedding[i])) m.insert(i);
  }
  return LocalRing{*ring, m};
}

Valuation valuation_from_hyperring(const FiniteHyperstructure& h, const HSet& o) {
  const UnitsAndIdeal um = units_and_maximal_ideal(h, o);
  std::vector<std::size_t> coset(h.size(), 0);
  std::vector<Element> reps;
  for (Element x : h.nonzero()) {
    bool found = false;
    for (std::size_t c = 0; c < reps.size() && !found; ++c) {
      if (um.units.contains(h.mul(x, *h.inverse(reps[c])))) {
        coset[x] = c;
        found = true;
      }
    }
    if (!found) {
      coset[x] = reps.size();
      reps.push_back(x);
    }
  }
  const std::size_t n = reps.size();
  std::vector<std::vector<std::size_t>> op(n, std::vector<std::size_t>(n));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(h.label(reps[i]) + "O*");
    for (std::size_t j = 0; j < n; ++j) {
      op[i][j] = coset[h.mul(reps[i], reps[j])];
      leq[i][j] = o.contains(h.mul(reps[j], *h.inverse(reps[i])));
    }
  }
  for (Element x : h.nonzero()) {
    for (Element y : h.nonzero()) {
      if (coset[h.mul(x, y)] != op[coset[x]][coset[y]]) {
        throw EquivalenceError("coset multiplication is not well defined");
      }
    }
  }
  const std::size_t identity = coset[h.one_or_throw()];
  Valuation v{ValueGroup::quotient(op, leq, identity, names), {}};
  for (Element x : h.carrier()) {
    v.values.push_back(x == h.zero() ? std::nullopt
                                     : Value(GroupElement{static_cast<std::int64_t>(coset[x])}));
  }
  return v;
}

ValuationRing ring_from_valuation(const FiniteHyperstructure& h, const Valuation& v) {
  const ViolationReport bad = is_valuation(h, v);
  if (!bad.empty()) throw std::invalid_argument("not a valuation: " + bad.summary());
  const GroupElement zero = v.group.identity();
  ValuationRing out;
  for (Element x : h.carrier()) {
    if (leq_inf(v.group, zero, v.values[x])) out.o.insert(x);
    if (!leq_inf(v.group, v.values[x], zero)) out.m.insert(x);
  }
  return out;
}

construct::Quotient residue_hyperfield(const FiniteHyperstructure& h, const HSet& o) {
  const LocalRing local = local_ring(h, o);
  construct::Quotient q = construct::quotient(local.ring.structure, local.maximal);
  const ViolationReport bad = check_hyperfield(q.structure);
  if (!bad.empty()) throw EquivalenceError("residue is not a hyperfield: " + bad.summary());
  return q;
}

bool equivalent(const FiniteHyperstructure& h, const Valuation& a, const Valuation& b) {
  if (a.values.size() != h.size() || b.values.size() != h.size()) return false;
  for (Element x : h.carrier()) {
    if (a.values[x].has_value() != b.values[x].has_value()) return false;
    for (Element y : h.carrier()) {
      if (leq_inf(a.group, a.values[x], a.values[y]) !=
          leq_inf(b.group, b.values[x], b.values[y])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// The defining conditions only; strictness is a consequence checked apart.
bool valuation_ring_by_definition(const FiniteHyperstructure& h, const HSet& o) {
  const ViolationReport r = is_valuation_hyperring(h, o);
  return !r.has("zero") && !r.has("subhyperring") && !r.has("valuation");
}

}  // namespace

std::vector<HSet> multiplicative_subgroups(const FiniteHyperstructure& h) {
  const Element one = h.one_or_throw();
  auto close = [&](HSet s) {
    while (true) {
      const HSet next = s | set_mul(h, s, s);
      if (next == s) return s;
      s = next;
    }
  };
  std::set<HSet> found{HSet{one}};
  std::vector<HSet> frontier{HSet{one}};
  while (!frontier.empty()) {
    const HSet s = frontier.back();
    frontier.pop_back();
    for (Element x : h.nonzero() - s) {
      const HSet bigger = close(s | HSet{x});
      if (found.insert(bigger).second) frontier.push_back(bigger);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<HSet> enumerate_valuation_hyperrings(const FiniteHyperstructure& h) {
  for (Element x : h.nonzero()) {
    if (!h.inverse(x)) throw std::invalid_argument(h.name() + " is not a hyperfield");
  }
  std::set<HSet> out;
  for (const HSet& u : multiplicative_subgroups(h)) {
    std::vector<HSet> cosets;
    HSet covered;
    for (Element x : h.nonzero()) {
      if (covered.contains(x)) continue;
      const HSet c = set_mul(h, u, HSet{x});
      cosets.push_back(c);
      covered = covered | c;
    }
    if (cosets.size() > 20) throw std::invalid_argument("too many cosets to search");
    // Positive cones: sets of cosets containing U, closed under products and
    // meeting every pair {C, C^-1} in exactly one member unless C = C^-1 = U.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cosets.size()); ++bits) {
      HSet cone;
      for (std::size_t i = 0; i < cosets.size(); ++i) {
        if ((bits >> i) & 1U) cone = cone | cosets[i];
      }
      if (!u.subset_of(cone) || !set_mul(h, cone, cone).subset_of(cone)) continue;
      bool ok = true;
      for (Element x : h.nonzero()) {
        const bool in = cone.contains(x), inv_in = cone.contains(*h.inverse(x));
        if (!(in || inv_in) || (in && inv_in && !u.contains(x))) ok = false;
      }
      if (!ok) continue;
      const HSet o = cone | HSet{h.zero()};
      if (valuation_ring_by_definition(h, o)) out.insert(o);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<HSet> enumerate_valuation_hyperrings_exhaustive(const FiniteHyperstructure& h) {
  const std::vector<Element> nz = h.nonzero().members();
  if (nz.size() > 20) throw std::invalid_argument("carrier too large for subset search");
  std::vector<HSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nz.size()); ++bits) {
    HSet o{h.zero()};
    for (std::size_t i = 0; i < nz.size(); ++i) {
      if ((bits >> i) & 1U) o.insert(nz[i]);
    }
    if (valuation_ring_by_definition(h, o)) out.push_back(o);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hfw::val
