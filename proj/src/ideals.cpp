#include "hfw/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hfw/axioms.hpp"

namespace hfw::construct {

bool is_hyperideal(const FiniteHyperstructure& r, const HSet& i) {
  if (!i.contains(r.zero()) || !i.subset_of(r.carrier())) return false;
  if (!is_strict_subset(r, i)) return false;
  for (Element x : i) {
    for (Element y = 0; y < r.size(); ++y) {
      if (!i.contains(r.mul(y, x))) return false;
    }
  }
  return true;
}

Quotient quotient(const FiniteHyperstructure& r, const HSet& i) {
  if (!is_hyperideal(r, i)) throw std::invalid_argument("quotient: not a hyperideal");
  const auto n = static_cast<Element>(r.size());

  // x + I = union of x + a over a in I; must coincide with the relation classes.
  std::vector<Element> projection(n, n);
  std::vector<HSet> classes;
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (projection[x] != n) continue;
    HSet cls = set_add(r, HSet{x}, i);
    HSet related;
    for (Element y = 0; y < n; ++y) {
      if (r.add(x, r.neg(y)).intersects(i)) related.insert(y);
    }
    if (cls != related) throw EquivalenceError("coset x+I differs from the class of ~_I");
    for (Element y : cls) {
      if (projection[y] != n) throw EquivalenceError("cosets overlap");
      projection[y] = static_cast<Element>(classes.size());
    }
    classes.push_back(cls);
    reps.push_back(x);
  }

  const std::size_t m = classes.size();
  std::vector<std::string> labels;
  std::vector<Element> neg(m);
  std::vector<std::vector<Element>> mul(m, std::vector<Element>(m));
  std::vector<std::vector<HSet>> add(m, std::vector<HSet>(m));
  for (std::size_t c = 0; c < m; ++c) {
    labels.push_back(m == n ? r.label(reps[c]) : r.label(reps[c]) + "+I");
    neg[c] = projection[r.neg(reps[c])];
    for (std::size_t d = 0; d < m; ++d) {
      bool first = true;
      for (Element x : classes[c]) {
        for (Element y : classes[d]) {
          HSet sum;
          for (Element z : r.add(x, y)) sum.insert(projection[z]);
          const Element prod = projection[r.mul(x, y)];
          if (first) {
            add[c][d] = sum;
            mul[c][d] = prod;
            first = false;
          } else if (add[c][d] != sum || mul[c][d] != prod) {
            throw EquivalenceError("quotient operations depend on representatives");
          }
        }
      }
    }
  }
  std::optional<Element> one;
  if (r.one() && projection[*r.one()] != projection[r.zero()]) one = projection[*r.one()];
  FiniteHyperstructure structure(r.name() + "/I", labels, projection[r.zero()], one, neg, mul,
                                 add);
  return Quotient{std::move(structure), std::move(projection), std::move(classes)};
}

FiniteHyperstructure quotient_hyperring(const FiniteHyperstructure& r, const HSet& i) {
  return quotient(r, i).structure;
}

bool is_prime_direct(const FiniteHyperstructure& r, const HSet& i) {
  const auto n = static_cast<Element>(r.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (i.contains(r.mul(x, y)) && !i.contains(x) && !i.contains(y)) return false;
    }
  }
  return true;
}

bool is_prime_via_quotient(const FiniteHyperstructure& r, const HSet& i) {
  return is_integral_hyperdomain(quotient_hyperring(r, i));
}

bool is_prime(const FiniteHyperstructure& r, const HSet& i) {
  const bool direct = is_prime_direct(r, i);
  if (direct != is_prime_via_quotient(r, i)) {
    throw EquivalenceError("prime: definition and quotient characterization disagree");
  }
  return direct;
}

bool is_maximal_direct(const FiniteHyperstructure& r, const HSet& i) {
  if (i == r.carrier()) return false;
  for (const HSet& j : enumerate_hyperideals(r)) {
    if (i.subset_of(j) && i != j && j != r.carrier()) return false;
  }
  return true;
}

bool is_maximal_via_quotient(const FiniteHyperstructure& r, const HSet& i) {
  if (!r.one()) throw std::invalid_argument("maximality via quotient needs a unity");
  return check_hyperfield(quotient_hyperring(r, i), 1).empty();
}

bool is_maximal(const FiniteHyperstructure& r, const HSet& i) {
  const bool direct = is_maximal_direct(r, i);
  if (direct != is_maximal_via_quotient(r, i)) {
    throw EquivalenceError("maximal: definition and quotient characterization disagree");
  }
  return direct;
}

HSet generated_hyperideal(const FiniteHyperstructure& r, HSet const& seed) {
  HSet ideal = seed | HSet{r.zero()};
  for (;;) {
    HSet next = ideal;
    for (Element a : ideal) {
      for (Element b : ideal) next |= r.add(a, r.neg(b));
      for (Element x = 0; x < r.size(); ++x) next.insert(r.mul(x, a));
    }
    if (next == ideal) return ideal;
    ideal = next;
  }
}

std::vector<HSet> enumerate_hyperideals(const FiniteHyperstructure& r, std::size_t carrier_bound) {
  if (r.size() > carrier_bound) throw std::invalid_argument("carrier exceeds enumeration bound");
  std::set<HSet> found;
  std::deque<HSet> queue;
  const HSet start = generated_hyperideal(r, HSet{r.zero()});
  found.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const HSet current = queue.front();
    queue.pop_front();
    for (Element x : r.carrier() - current) {
      HSet bigger = generated_hyperideal(r, current | HSet{x});
      if (found.insert(bigger).second) queue.push_back(bigger);
    }
  }
  std::vector<HSet> out;
  for (const HSet& i : found) {
    if (is_hyperideal(r, i)) out.push_back(i);
  }
  return out;
}

}  // namespace hfw::construct
