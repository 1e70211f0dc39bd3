#include "hfw/factor.hpp"

#include <algorithm>
#include <set>

#include "hfw/number_theory.hpp"

namespace hfw::construct {

namespace {

void require_prime(int p) {
  if (!nt::is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

int reduce(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

/// Least residues representing the cosets of T, in ascending order.
std::vector<int> coset_representatives(const SubgroupSpec& t) {
  const int p = t.modulus();
  std::vector<int> reps;
  std::vector<bool> seen(p, false);
  for (int x = 1; x < p; ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int u : t.elements()) seen[reduce(1LL * x * u, p)] = true;
  }
  return reps;
}

}  // namespace

SubgroupSpec SubgroupSpec::from_generators(int p, const std::vector<int>& generators) {
  require_prime(p);
  std::set<int> group{1};
  for (int g : generators) {
    if (reduce(g, p) == 0) throw std::invalid_argument("generator is zero modulo p");
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x : std::vector<int>(group.begin(), group.end())) {
      for (int g : generators) {
        if (group.insert(reduce(1LL * x * g, p)).second) grew = true;
      }
    }
  }
  return SubgroupSpec(p, {group.begin(), group.end()});
}

SubgroupSpec SubgroupSpec::from_elements(int p, const std::vector<int>& elements) {
  require_prime(p);
  std::set<int> set;
  for (int x : elements) {
    if (reduce(x, p) == 0) throw std::invalid_argument("subgroup element is zero modulo p");
    set.insert(reduce(x, p));
  }
  if (!set.count(1)) throw std::invalid_argument("subgroup must contain 1");
  for (int a : set) {
    for (int b : set) {
      if (!set.count(reduce(1LL * a * b, p))) {
        throw std::invalid_argument("element set is not closed under multiplication");
      }
    }
  }
  return SubgroupSpec(p, {set.begin(), set.end()});
}

bool SubgroupSpec::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), reduce(x, p_));
}

Element factor_class(const SubgroupSpec& t, int x) {
  const int p = t.modulus();
  x = reduce(x, p);
  if (x == 0) return 0;
  const std::vector<int> reps = coset_representatives(t);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (int u : t.elements()) {
      if (reduce(1LL * reps[i] * u, p) == x) return static_cast<Element>(i + 1);
    }
  }
  throw std::logic_error("residue not covered by cosets");
}

FiniteHyperstructure factor_hyperfield(int p, const SubgroupSpec& t, int prime_bound) {
  require_prime(p);
  if (p > prime_bound) throw std::invalid_argument("modulus exceeds the configured bound");
  if (t.modulus() != p) throw std::invalid_argument("subgroup belongs to a different modulus");
  const std::vector<int> reps = coset_representatives(t);
  const std::size_t n = reps.size() + 1;
  if (n > HSet::kMaxCarrier) throw std::invalid_argument("too many cosets for a finite carrier");

  std::vector<int> class_of(p);
  class_of[0] = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (int u : t.elements()) class_of[reduce(1LL * reps[i] * u, p)] = static_cast<int>(i + 1);
  }
  std::vector<int> rep_of{0};
  rep_of.insert(rep_of.end(), reps.begin(), reps.end());

  std::vector<std::string> labels;
  std::vector<Element> neg(n);
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  std::vector<std::vector<HSet>> add(n, std::vector<HSet>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("[" + std::to_string(rep_of[i]) + "]");
    neg[i] = static_cast<Element>(class_of[reduce(-rep_of[i], p)]);
    for (std::size_t j = 0; j < n; ++j) {
      const long long x = rep_of[i];
      const long long y = rep_of[j];
      mul[i][j] = static_cast<Element>(class_of[reduce(x * y, p)]);
      for (int tt : t.elements()) {
        for (int u : t.elements()) {
          add[i][j].insert(static_cast<Element>(class_of[reduce(x * tt + y * u, p)]));
        }
      }
    }
  }
  std::string name = "F" + std::to_string(p) + "_T{";
  for (std::size_t i = 0; i < t.elements().size(); ++i) {
    name += (i ? "," : "") + std::to_string(t.elements()[i]);
  }
  name += "}";
  return FiniteHyperstructure(name, labels, 0, 1, neg, mul, add);
}

SubgroupSpec squares_subgroup(int p) {
  require_prime(p);
  std::set<int> sq;
  for (int x = 1; x < p; ++x) sq.insert(reduce(1LL * x * x, p));
  return SubgroupSpec::from_elements(p, {sq.begin(), sq.end()});
}

}  // namespace hfw::construct
