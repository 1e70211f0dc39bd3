#include "hfw/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hfw/axioms.hpp"

namespace hfw::construct {

namespace {

/// Multiplication tables of the abelian groups of a given order, on indices
/// 0..m-1 with 0 the identity.
std::vector<std::vector<std::vector<int>>> abelian_groups(std::size_t m) {
  std::vector<std::vector<std::vector<int>>> out;
  auto cyclic = [](std::size_t k) {
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) t[i][j] = static_cast<int>((i + j) % k);
    }
    return t;
  };
  out.push_back(cyclic(m));
  if (m == 4) {
    std::vector<std::vector<int>> klein(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) klein[i][j] = i ^ j;
    }
    out.push_back(klein);
  }
  return out;
}

struct Encoding {
  std::vector<Element> neg;
  std::vector<Element> mul;
  std::vector<std::uint64_t> add;
  friend auto operator<=>(const Encoding&, const Encoding&) = default;
};

Encoding encode(const FiniteHyperstructure& h, const std::vector<Element>& perm) {
  // perm maps old index -> new index
  const std::size_t n = h.size();
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x) inv[perm[x]] = x;
  Encoding e;
  for (Element i = 0; i < n; ++i) {
    e.neg.push_back(perm[h.neg(inv[i])]);
    for (Element j = 0; j < n; ++j) {
      e.mul.push_back(perm[h.mul(inv[i], inv[j])]);
      HSet s;
      for (Element z : h.add(inv[i], inv[j])) s.insert(perm[z]);
      e.add.push_back(s.mask());
    }
  }
  return e;
}

FiniteHyperstructure apply(const FiniteHyperstructure& h, const std::vector<Element>& perm,
                           const std::string& name) {
  const std::size_t n = h.size();
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x) inv[perm[x]] = x;
  std::vector<std::string> labels;
  std::vector<Element> neg(n);
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  std::vector<std::vector<HSet>> add(n, std::vector<HSet>(n));
  for (Element i = 0; i < n; ++i) {
    labels.push_back(h.label(inv[i]));
    neg[i] = perm[h.neg(inv[i])];
    for (Element j = 0; j < n; ++j) {
      mul[i][j] = perm[h.mul(inv[i], inv[j])];
      for (Element z : h.add(inv[i], inv[j])) add[i][j].insert(perm[z]);
    }
  }
  std::optional<Element> one;
  if (h.one()) one = perm[*h.one()];
  return FiniteHyperstructure(name, labels, perm[h.zero()], one, neg, mul, add);
}

}  // namespace

FiniteHyperstructure canonical_form(const FiniteHyperstructure& h) {
  const std::size_t n = h.size();
  const Element one = h.one_or_throw();
  std::vector<Element> rest;
  for (Element x = 0; x < n; ++x) {
    if (x != h.zero() && x != one) rest.push_back(x);
  }
  std::vector<Element> best_perm;
  std::optional<Encoding> best;
  std::vector<Element> order = rest;  // new positions 2.. assigned in this order
  do {
    std::vector<Element> perm(n);
    perm[h.zero()] = 0;
    perm[one] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = static_cast<Element>(i + 2);
    Encoding e = encode(h, perm);
    if (!best || e < *best) {
      best = e;
      best_perm = perm;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  // Labels follow the new positions.
  FiniteHyperstructure relabelled = apply(h, best_perm, h.name());
  std::vector<std::string> labels{"0", "1"};
  for (std::size_t i = 2; i < n; ++i) {
    labels.push_back(relabelled.neg(1) == i ? "-1" : "g" + std::to_string(i));
  }
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  std::vector<std::vector<HSet>> add(n, std::vector<HSet>(n));
  std::vector<Element> neg(n);
  for (Element i = 0; i < n; ++i) {
    neg[i] = relabelled.neg(i);
    for (Element j = 0; j < n; ++j) {
      mul[i][j] = relabelled.mul(i, j);
      add[i][j] = relabelled.add(i, j);
    }
  }
  return FiniteHyperstructure(h.name(), labels, 0, 1, neg, mul, add);
}

std::vector<FiniteHyperstructure> enumerate_hyperfields(std::size_t n) {
  if (n < 2 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumerate_hyperfields: order must be in [2, 5]");
  }
  const std::size_t m = n - 1;
  // Carrier index 0 is zero; group element g sits at index g + 1.
  std::map<Encoding, FiniteHyperstructure> found;
  const std::vector<Element> identity_perm = [&] {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }();

  for (const auto& group : abelian_groups(m)) {
    auto gmul = [&](Element a, Element b) -> Element {
      if (a == 0 || b == 0) return 0;
      return static_cast<Element>(group[a - 1][b - 1] + 1);
    };
    auto ginv = [&](Element a) -> Element {
      for (Element b = 1; b < n; ++b) {
        if (gmul(a, b) == 1) return b;
      }
      return 0;
    };
    std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) mul[a][b] = gmul(a, b);
    }

    for (Element eps = 1; eps < n; ++eps) {
      if (gmul(eps, eps) != 1) continue;  // -1 squares to 1
      std::vector<Element> neg(n);
      for (Element a = 0; a < n; ++a) neg[a] = gmul(eps, a);

      // Free rows: 1 + x for one representative of each {x, x^-1}; the
      // partner row is x(1 + x^-1).
      std::vector<Element> free_rows;
      for (Element x = 1; x < n; ++x) {
        if (ginv(x) >= x) free_rows.push_back(x);
      }
      std::vector<HSet> row(n);
      row[0] = HSet{1};
      const std::uint64_t subsets = (std::uint64_t{1} << n);

      std::function<void(std::size_t)> choose = [&](std::size_t k) {
        if (k == free_rows.size()) {
          std::vector<std::vector<HSet>> add(n, std::vector<HSet>(n));
          for (Element a = 0; a < n; ++a) {
            for (Element b = 0; b < n; ++b) {
              if (a == 0) {
                add[a][b] = HSet{b};
              } else if (b == 0) {
                add[a][b] = HSet{a};
              } else {
                for (Element z : row[gmul(ginv(a), b)]) add[a][b].insert(gmul(a, z));
              }
            }
          }
          std::vector<std::string> labels;
          for (Element a = 0; a < n; ++a) labels.push_back("e" + std::to_string(a));
          FiniteHyperstructure h("candidate", labels, 0, 1, neg, mul, add);
          if (!check_hyperfield(h, 1).empty()) return;
          FiniteHyperstructure c = canonical_form(h);
          found.emplace(encode(c, identity_perm), c);
          return;
        }
        const Element x = free_rows[k];
        const Element xi = ginv(x);
        for (std::uint64_t mask = 1; mask < subsets; ++mask) {
          HSet s = HSet::from_mask(mask);
          // 0 in 1 + x exactly when x = -1
          if (s.contains(0) != (x == eps)) continue;
          HSet partner;
          for (Element z : s) partner.insert(gmul(xi, z));
          if (xi == x && partner != s) continue;
          row[x] = s;
          row[xi] = partner;
          choose(k + 1);
        }
      };
      choose(0);
    }
  }

  std::vector<FiniteHyperstructure> out;
  std::size_t index = 0;
  for (auto& [enc, h] : found) {
    out.push_back(h.renamed("H" + std::to_string(n) + "_" + std::to_string(index++)));
  }
  return out;
}

}  // namespace hfw::construct
