#include "hfw/axioms.hpp"

#include <numeric>
#include <sstream>

namespace hfw {

void ViolationReport::add(const std::string& axiom, std::vector<Element> witness,
                          std::string detail) {
  std::size_t& n = counts_[axiom];
  if (n < cap_) violations_.push_back({axiom, std::move(witness), std::move(detail)});
  ++n;
}

void ViolationReport::merge(const ViolationReport& other) {
  std::map<std::string, std::size_t> stored;
  for (const auto& v : violations_) ++stored[v.axiom];
  for (const auto& v : other.violations_) {
    if (stored[v.axiom] < cap_) {
      violations_.push_back(v);
      ++stored[v.axiom];
    }
  }
  for (const auto& [axiom, n] : other.counts_) counts_[axiom] += n;
}

std::size_t ViolationReport::count(const std::string& axiom) const {
  auto it = counts_.find(axiom);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t ViolationReport::total() const {
  std::size_t n = 0;
  for (const auto& [a, c] : counts_) n += c;
  return n;
}

std::vector<std::string> ViolationReport::axioms() const {
  std::vector<std::string> out;
  for (const auto& [a, c] : counts_) out.push_back(a);
  return out;
}

std::string ViolationReport::summary() const {
  if (empty()) return "ok";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : counts_) {
    if (!first) os << ", ";
    os << a << " x" << c;
    first = false;
  }
  return os.str();
}

ViolationReport check_canonical_hypergroup(const FiniteHyperstructure& h, std::size_t cap) {
  ViolationReport report(cap);
  const auto n = static_cast<Element>(h.size());
  const Element zero = h.zero();

  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      // H2
      if (h.add(x, y) != h.add(y, x)) {
        report.add("H2", {x, y}, h.format(h.add(x, y)) + " != " + h.format(h.add(y, x)));
      }
      // H1
      for (Element z = 0; z < n; ++z) {
        HSet left = set_add(h, h.add(x, y), HSet{z});
        HSet right = set_add(h, HSet{x}, h.add(y, z));
        if (left != right) {
          report.add("H1", {x, y, z}, h.format(left) + " != " + h.format(right));
        }
      }
    }
  }

  // H3: exactly one y with 0 in x + y, and it is the stored negation.
  for (Element x = 0; x < n; ++x) {
    std::vector<Element> candidates;
    for (Element y = 0; y < n; ++y) {
      if (h.add(x, y).contains(zero)) candidates.push_back(y);
    }
    if (candidates.size() != 1) {
      report.add("H3", {x}, std::to_string(candidates.size()) + " candidates for -x");
    } else if (candidates.front() != h.neg(x)) {
      report.add("H3", {x, candidates.front()}, "stored negation disagrees");
    }
  }

  // H4: z in x + y implies y in z - x.
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z : h.add(x, y)) {
        if (!h.add(z, h.neg(x)).contains(y)) {
          report.add("H4", {x, y, z}, "z in x+y but y not in z-x");
        }
      }
    }
  }
  return report;
}

ViolationReport check_hyperring(const FiniteHyperstructure& h, std::size_t cap) {
  ViolationReport report = check_canonical_hypergroup(h, cap);
  const auto n = static_cast<Element>(h.size());
  const Element zero = h.zero();
  for (Element x = 0; x < n; ++x) {
    if (h.mul(x, zero) != zero || h.mul(zero, x) != zero) report.add("R2", {x}, "x*0 != 0");
    for (Element y = 0; y < n; ++y) {
      if (h.mul(x, y) != h.mul(y, x)) report.add("R2", {x, y}, "multiplication not commutative");
      for (Element z = 0; z < n; ++z) {
        if (h.mul(h.mul(x, y), z) != h.mul(x, h.mul(y, z))) {
          report.add("R2", {x, y, z}, "multiplication not associative");
        }
        HSet left = set_mul(h, HSet{x}, h.add(y, z));
        HSet right = h.add(h.mul(x, y), h.mul(x, z));
        if (left != right) report.add("R3", {x, y, z}, h.format(left) + " != " + h.format(right));
      }
    }
  }
  return report;
}

ViolationReport check_hyperfield(const FiniteHyperstructure& h, std::size_t cap) {
  ViolationReport report = check_hyperring(h, cap);
  const auto n = static_cast<Element>(h.size());
  if (!h.one() || *h.one() == h.zero()) {
    report.add("unity", {}, "no unity distinct from zero");
    return report;
  }
  const Element one = *h.one();
  for (Element x = 0; x < n; ++x) {
    if (h.mul(one, x) != x || h.mul(x, one) != x) report.add("unity", {x}, "1*x != x");
  }
  for (Element x = 0; x < n; ++x) {
    if (x == h.zero()) continue;
    if (!h.inverse(x)) report.add("group", {x}, "no multiplicative inverse");
    for (Element y = 0; y < n; ++y) {
      if (y != h.zero() && h.mul(x, y) == h.zero()) {
        report.add("group", {x, y}, "product of nonzero elements is zero");
      }
    }
  }
  return report;
}

DoubleDistributivity check_double_distributivity(const FiniteHyperstructure& h) {
  DoubleDistributivity out;
  const auto n = static_cast<Element>(h.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        for (Element d = 0; d < n; ++d) {
          HSet left = set_mul(h, h.add(a, b), h.add(c, d));
          HSet right = HSet{h.mul(a, c)};
          right = set_add(h, right, HSet{h.mul(a, d)});
          right = set_add(h, right, HSet{h.mul(b, c)});
          right = set_add(h, right, HSet{h.mul(b, d)});
          if (!left.subset_of(right)) {
            out.inclusion_ok = false;
            out.inclusion_failures.push_back({a, b, c, d});
          } else if (left != right) {
            out.equality_failures.push_back({a, b, c, d});
          }
        }
      }
    }
  }
  return out;
}

bool is_integral_hyperdomain(const FiniteHyperstructure& h) {
  const auto n = static_cast<Element>(h.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (h.mul(x, y) == h.zero() && x != h.zero() && y != h.zero()) return false;
    }
  }
  return true;
}

}  // namespace hfw
