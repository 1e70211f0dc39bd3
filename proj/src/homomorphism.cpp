#include "hfw/homomorphism.hpp"

#include <functional>

#include "hfw/axioms.hpp"

namespace hfw {

HSet HomomorphismSpec::image(const HSet& s) const {
  HSet out;
  for (Element x : s) out.insert(map.at(x));
  return out;
}

ViolationReport check_homomorphism(const HomomorphismSpec& phi, bool strict, std::size_t cap) {
  ViolationReport report(cap);
  const auto& r = phi.source;
  const auto& s = phi.target;
  const auto n = static_cast<Element>(r.size());
  if (phi.map.size() != r.size()) {
    report.add("map", {}, "map is not total on the source carrier");
    return report;
  }
  for (Element x = 0; x < n; ++x) {
    if (!s.contains(phi(x))) {
      report.add("map", {x}, "image outside target carrier");
      return report;
    }
  }
  if (phi(r.zero()) != s.zero()) report.add("HH1", {r.zero()}, "phi(0) != 0");
  for (Element x = 0; x < n; ++x) {
    if (phi(r.neg(x)) != s.neg(phi(x))) report.add("neg", {x}, "phi(-x) != -phi(x)");
    for (Element y = 0; y < n; ++y) {
      if (phi(r.mul(x, y)) != s.mul(phi(x), phi(y))) report.add("HH2", {x, y});
      const HSet lhs = phi.image(r.add(x, y));
      const HSet& rhs = s.add(phi(x), phi(y));
      if (strict) {
        if (lhs != rhs) report.add("HH3'", {x, y}, s.format(lhs) + " != " + s.format(rhs));
      } else if (!lhs.subset_of(rhs)) {
        report.add("HH3", {x, y}, s.format(lhs) + " not in " + s.format(rhs));
      }
    }
  }
  return report;
}

HSet kernel(const HomomorphismSpec& phi) {
  if (!check_homomorphism(phi, false).empty()) {
    throw std::invalid_argument("kernel: map is not a homomorphism");
  }
  HSet out;
  for (Element x = 0; x < phi.source.size(); ++x) {
    if (phi(x) == phi.target.zero()) out.insert(x);
  }
  return out;
}

HomomorphismSpec identity_map(const FiniteHyperstructure& h) {
  std::vector<Element> map(h.size());
  for (Element x = 0; x < h.size(); ++x) map[x] = x;
  return {h, h, map};
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteHyperstructure& a,
                                                     const FiniteHyperstructure& b) {
  const std::size_t n = a.size();
  if (b.size() != n || a.one().has_value() != b.one().has_value()) return std::nullopt;
  std::vector<Element> map(n, static_cast<Element>(n));
  std::vector<bool> used(n, false);
  map[a.zero()] = b.zero();
  used[b.zero()] = true;
  if (a.one()) {
    if (*a.one() == a.zero()) {
      if (*b.one() != b.zero()) return std::nullopt;
    } else {
      if (used[*b.one()]) return std::nullopt;
      map[*a.one()] = *b.one();
      used[*b.one()] = true;
    }
  }
  auto consistent = [&](Element x) {
    // products and negations among assigned elements
    for (Element y = 0; y < n; ++y) {
      if (map[y] == n) continue;
      Element xy = a.mul(x, y);
      if (map[xy] != n && map[xy] != b.mul(map[x], map[y])) return false;
    }
    Element nx = a.neg(x);
    return map[nx] == n || map[nx] == b.neg(map[x]);
  };
  std::function<bool(Element)> assign = [&](Element x) -> bool {
    if (x == n) {
      HomomorphismSpec phi{a, b, map};
      return check_homomorphism(phi, true, 1).empty();
    }
    if (map[x] != n) return consistent(x) && assign(x + 1);
    for (Element y = 0; y < n; ++y) {
      if (used[y]) continue;
      map[x] = y;
      used[y] = true;
      if (consistent(x) && assign(x + 1)) return true;
      used[y] = false;
      map[x] = static_cast<Element>(n);
    }
    return false;
  };
  if (assign(0)) return map;
  return std::nullopt;
}

bool is_strict_subset(const FiniteHyperstructure& h, const HSet& s) {
  for (Element a : s) {
    for (Element b : s) {
      if (!h.add(a, h.neg(b)).subset_of(s)) return false;
      if (!s.contains(h.mul(a, b))) return false;
    }
  }
  return true;
}

std::optional<Subhyperring> induced_subhyperring(const FiniteHyperstructure& h, const HSet& s) {
  if (!s.contains(h.zero())) throw std::invalid_argument("induced_subhyperring: 0 not in S");
  const std::vector<Element> members = s.members();
  const std::size_t m = members.size();
  std::vector<Element> local(h.size(), static_cast<Element>(m));
  for (Element i = 0; i < m; ++i) local[members[i]] = i;

  std::vector<std::string> labels;
  std::vector<Element> neg(m);
  std::vector<std::vector<Element>> mul(m, std::vector<Element>(m));
  std::vector<std::vector<HSet>> add(m, std::vector<HSet>(m));
  for (Element i = 0; i < m; ++i) {
    const Element a = members[i];
    labels.push_back(h.label(a));
    if (!s.contains(h.neg(a))) return std::nullopt;
    neg[i] = local[h.neg(a)];
    for (Element j = 0; j < m; ++j) {
      const Element b = members[j];
      if (!s.contains(h.mul(a, b))) return std::nullopt;
      mul[i][j] = local[h.mul(a, b)];
      const HSet trace = h.add(a, b) & s;
      if (trace.empty()) return std::nullopt;
      for (Element c : trace) add[i][j].insert(local[c]);
    }
  }
  std::optional<Element> one;
  if (h.one() && s.contains(*h.one())) one = local[*h.one()];
  FiniteHyperstructure induced(h.name() + "|S", labels, local[h.zero()], one, neg, mul, add);
  if (!check_hyperring(induced, 1).empty()) return std::nullopt;
  return Subhyperring{induced, members, is_strict_subset(h, s)};
}

}  // namespace hfw
