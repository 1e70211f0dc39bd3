#include "hfw/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hfw/number_theory.hpp"

namespace hfw {

FiniteHyperstructure::FiniteHyperstructure(std::string name, std::vector<std::string> labels,
                                           Element zero, std::optional<Element> one,
                                           std::vector<Element> neg,
                                           std::vector<std::vector<Element>> mul,
                                           std::vector<std::vector<HSet>> add)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      zero_(zero),
      one_(one),
      neg_(std::move(neg)),
      mul_(std::move(mul)),
      add_(std::move(add)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("empty carrier");
  if (n > HSet::kMaxCarrier) throw std::invalid_argument("carrier too large");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) {
    throw std::invalid_argument("labels must be unique");
  }
  if (zero_ >= n) throw std::invalid_argument("zero outside carrier");
  if (one_ && *one_ >= n) throw std::invalid_argument("one outside carrier");
  if (neg_.size() != n || mul_.size() != n || add_.size() != n) {
    throw std::invalid_argument("table size does not match carrier");
  }
  const HSet all = HSet::full(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (neg_[x] >= n) throw std::invalid_argument("negation leaves carrier");
    if (mul_[x].size() != n || add_[x].size() != n) {
      throw std::invalid_argument("table row size does not match carrier");
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (mul_[x][y] >= n) throw std::invalid_argument("product leaves carrier");
      if (add_[x][y].empty()) throw std::invalid_argument("empty sum in addition table");
      if (!add_[x][y].subset_of(all)) throw std::invalid_argument("sum leaves carrier");
    }
  }
}

void FiniteHyperstructure::check(Element x) const {
  if (x >= size()) {
    throw DomainError("element " + std::to_string(x) + " outside carrier of " + name_);
  }
}

const std::string& FiniteHyperstructure::label(Element x) const {
  check(x);
  return labels_[x];
}

Element FiniteHyperstructure::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw DomainError("no element labelled '" + label + "' in " + name_);
  return static_cast<Element>(it - labels_.begin());
}

Element FiniteHyperstructure::one_or_throw() const {
  if (!one_) throw std::invalid_argument(name_ + " has no unity");
  return *one_;
}

Element FiniteHyperstructure::neg(Element x) const {
  check(x);
  return neg_[x];
}

Element FiniteHyperstructure::mul(Element x, Element y) const {
  check(x);
  check(y);
  return mul_[x][y];
}

const HSet& FiniteHyperstructure::add(Element x, Element y) const {
  check(x);
  check(y);
  return add_[x][y];
}

std::optional<Element> FiniteHyperstructure::inverse(Element x) const {
  check(x);
  if (!one_) return std::nullopt;
  for (Element y = 0; y < size(); ++y) {
    if (mul_[x][y] == *one_ && mul_[y][x] == *one_) return y;
  }
  return std::nullopt;
}

FiniteHyperstructure FiniteHyperstructure::with_add(Element x, Element y, HSet value) const {
  check(x);
  check(y);
  FiniteHyperstructure copy = *this;
  copy.add_[x][y] = value;
  return FiniteHyperstructure(copy.name_, copy.labels_, copy.zero_, copy.one_, copy.neg_,
                              copy.mul_, copy.add_);
}

FiniteHyperstructure FiniteHyperstructure::with_mul(Element x, Element y, Element value) const {
  check(x);
  check(y);
  FiniteHyperstructure copy = *this;
  copy.mul_[x][y] = value;
  return FiniteHyperstructure(copy.name_, copy.labels_, copy.zero_, copy.one_, copy.neg_,
                              copy.mul_, copy.add_);
}

FiniteHyperstructure FiniteHyperstructure::with_neg(Element x, Element value) const {
  check(x);
  FiniteHyperstructure copy = *this;
  copy.neg_[x] = value;
  return FiniteHyperstructure(copy.name_, copy.labels_, copy.zero_, copy.one_, copy.neg_,
                              copy.mul_, copy.add_);
}

FiniteHyperstructure FiniteHyperstructure::renamed(std::string name) const {
  FiniteHyperstructure copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::string FiniteHyperstructure::format(const HSet& s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Element x : s) {
    if (!first) os << ", ";
    os << label(x);
    first = false;
  }
  os << '}';
  return os.str();
}

HSet hyper_add(const FiniteHyperstructure& h, Element x, Element y) { return h.add(x, y); }

HSet set_add(const FiniteHyperstructure& h, const HSet& a, const HSet& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("set_add on an empty set");
  HSet out;
  for (Element x : a) {
    for (Element y : b) out |= h.add(x, y);
  }
  return out;
}

HSet set_mul(const FiniteHyperstructure& h, const HSet& a, const HSet& b) {
  HSet out;
  for (Element x : a) {
    for (Element y : b) out.insert(h.mul(x, y));
  }
  return out;
}

HSet set_neg(const FiniteHyperstructure& h, const HSet& a) {
  HSet out;
  for (Element x : a) out.insert(h.neg(x));
  return out;
}

namespace builtin {

FiniteHyperstructure sign_hyperfield() {
  // 0, 1, -1
  const HSet all{0, 1, 2};
  std::vector<std::vector<HSet>> add{
      {HSet{0}, HSet{1}, HSet{2}},
      {HSet{1}, HSet{1}, all},
      {HSet{2}, all, HSet{2}},
  };
  std::vector<std::vector<Element>> mul{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  return FiniteHyperstructure("sign", {"0", "1", "-1"}, 0, 1, {0, 2, 1}, mul, add);
}

FiniteHyperstructure krasner_hyperfield() {
  std::vector<std::vector<HSet>> add{{HSet{0}, HSet{1}}, {HSet{1}, HSet{0, 1}}};
  std::vector<std::vector<Element>> mul{{0, 0}, {0, 1}};
  return FiniteHyperstructure("krasner", {"0", "1"}, 0, 1, {0, 1}, mul, add);
}

FiniteHyperstructure prime_field(int p) {
  if (!nt::is_prime(p) || p > static_cast<int>(HSet::kMaxCarrier)) {
    throw std::invalid_argument("prime_field: modulus out of range");
  }
  const auto n = static_cast<std::size_t>(p);
  std::vector<std::string> labels;
  std::vector<Element> neg(n);
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  std::vector<std::vector<HSet>> add(n, std::vector<HSet>(n));
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back(std::to_string(x));
    neg[x] = static_cast<Element>((n - x) % n);
    for (std::size_t y = 0; y < n; ++y) {
      mul[x][y] = static_cast<Element>(x * y % n);
      add[x][y] = HSet{static_cast<Element>((x + y) % n)};
    }
  }
  return FiniteHyperstructure("F" + std::to_string(p), labels, 0, 1, neg, mul, add);
}

FiniteHyperstructure zero_ring() {
  return FiniteHyperstructure("zero_ring", {"0"}, 0, std::nullopt, {0}, {{0}}, {{HSet{0}}});
}

}  // namespace builtin

}  // namespace hfw
