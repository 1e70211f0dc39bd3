#include "hfw/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfw::sym {

std::string format_value(const Value& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

Value zero_value(int k) { return Value(static_cast<std::size_t>(k), 0); }

Value unit_vector(int k, int i) {
  Value v = zero_value(k);
  v.at(static_cast<std::size_t>(i)) = 1;
  return v;
}

Value add_values(const Value& a, const Value& b) {
  if (a.size() != b.size()) throw std::invalid_argument("values of different rank");
  Value c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Value negate_value(const Value& a) {
  Value c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

Value predecessor(const Value& v) {
  Value p = v;
  p.back() -= 1;
  return p;
}

std::string SVElem::to_string() const {
  if (is_zero()) return "0";
  return std::string("(") + (sign > 0 ? "+" : "-") + "," + format_value(value) + ")";
}

SVElem make_elem(int sign, Value value) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  return {sign, std::move(value)};
}

SVElem operator-(const SVElem& x) {
  if (x.is_zero()) return x;
  return {-x.sign, x.value};
}

SVSet SVSet::of(const SVElem& x) {
  SVSet s;
  s.insert(x);
  return s;
}

SVSet SVSet::of(std::initializer_list<SVElem> xs) {
  SVSet s;
  for (const SVElem& x : xs) s.insert(x);
  return s;
}

SVSet SVSet::ball(const Value& from) {
  SVSet s;
  s.zero_ = true;
  s.tails_[0] = from;
  s.tails_[1] = from;
  return s;
}

SVSet SVSet::tail(int sign, const Value& from) {
  SVSet s;
  s.insert_tail(sign, from);
  return s;
}

void SVSet::insert(const SVElem& x) {
  if (x.is_zero()) {
    zero_ = true;
    return;
  }
  const auto& t = tails_[index(x.sign)];
  if (t && *t <= x.value) return;
  points_.insert(x);
  normalize();
}

void SVSet::insert_tail(int sign, const Value& from) {
  auto& t = tails_[index(sign)];
  if (!t || from < *t) t = from;
  normalize();
}

void SVSet::unite(const SVSet& other) {
  zero_ = zero_ || other.zero_;
  for (int sign : {1, -1}) {
    const auto& o = other.tails_[index(sign)];
    auto& t = tails_[index(sign)];
    if (o && (!t || *o < *t)) t = o;
  }
  points_.insert(other.points_.begin(), other.points_.end());
  normalize();
}

void SVSet::normalize() {
  for (int sign : {1, -1}) {
    auto& t = tails_[index(sign)];
    if (!t) continue;
    for (auto it = points_.begin(); it != points_.end();) {
      if (it->sign == sign && *t <= it->value) {
        it = points_.erase(it);
      } else {
        ++it;
      }
    }
    while (true) {
      const auto it = points_.find(SVElem{sign, predecessor(*t)});
      if (it == points_.end()) break;
      t = it->value;
      points_.erase(it);
    }
  }
}

bool SVSet::contains(const SVElem& x) const {
  if (x.is_zero()) return zero_;
  const auto& t = tails_[index(x.sign)];
  if (t && *t <= x.value) return true;
  return points_.count(x) != 0;
}

bool SVSet::empty() const { return !zero_ && finite() && points_.empty(); }

bool SVSet::subset_of(const SVSet& other) const {
  if (zero_ && !other.zero_) return false;
  for (int sign : {1, -1}) {
    const auto& t = tails_[index(sign)];
    if (!t) continue;
    const auto& o = other.tails_[index(sign)];
    if (!o || *t < *o) return false;
  }
  return std::all_of(points_.begin(), points_.end(),
                     [&](const SVElem& x) { return other.contains(x); });
}

bool SVSet::intersects(const SVSet& other) const {
  if (zero_ && other.zero_) return true;
  for (std::size_t i = 0; i < 2; ++i) {
    if (tails_[i] && other.tails_[i]) return true;
  }
  return std::any_of(points_.begin(), points_.end(),
                     [&](const SVElem& x) { return other.contains(x); }) ||
         std::any_of(other.points_.begin(), other.points_.end(),
                     [&](const SVElem& x) { return contains(x); });
}

bool SVSet::is_ball() const {
  return zero_ && tails_[0] && tails_[1] && *tails_[0] == *tails_[1] && points_.empty();
}

std::vector<SVElem> SVSet::members_within(int k, int bound) const {
  std::vector<SVElem> out;
  for (const SVElem& x : window_elements(k, bound)) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::string SVSet::to_string() const {
  std::vector<std::string> parts;
  if (zero_) parts.push_back("0");
  for (const SVElem& x : points_) parts.push_back(x.to_string());
  for (int sign : {1, -1}) {
    const auto& t = tails_[index(sign)];
    if (t) parts.push_back(std::string("(") + (sign > 0 ? "+" : "-") + ",>=" + format_value(*t) + ")");
  }
  std::string s = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s + "}";
}

int SignCharacter::operator()(const Value& g) const {
  if (g.size() != images.size()) throw std::invalid_argument("character of another rank");
  int s = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (images[i] == -1 && g[i] % 2 != 0) s = -s;
  }
  return s;
}

bool SignCharacter::trivial() const {
  return std::all_of(images.begin(), images.end(), [](int x) { return x == 1; });
}

std::string SignCharacter::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    s += (i ? "," : "") + std::string(images[i] > 0 ? "+1" : "-1");
  }
  return s + "]";
}

std::vector<SignCharacter> all_characters(int k) {
  std::vector<SignCharacter> out;
  for (unsigned bits = 0; bits < (1U << k); ++bits) {
    SignCharacter c;
    for (int i = 0; i < k; ++i) c.images.push_back(((bits >> i) & 1U) ? -1 : 1);
    out.push_back(c);
  }
  return out;
}

bool subset_of(const SVSet& s, const SymbolicSubset& t) {
  if (s.has_zero() && !t.contains(SVElem::zero())) return false;
  for (int sign : {1, -1}) {
    if (s.tail_from(sign) && !t.contains_tail(sign, *s.tail_from(sign))) return false;
  }
  return std::all_of(s.points().begin(), s.points().end(),
                     [&](const SVElem& x) { return t.contains(x); });
}

bool meets(const SVSet& s, const SymbolicSubset& t) {
  if (s.has_zero() && t.contains(SVElem::zero())) return true;
  for (int sign : {1, -1}) {
    if (s.tail_from(sign) && t.meets_tail(sign, *s.tail_from(sign))) return true;
  }
  return std::any_of(s.points().begin(), s.points().end(),
                     [&](const SVElem& x) { return t.contains(x); });
}

SymbolicSubset character_ordering(const SignCharacter& chi) {
  SymbolicSubset p;
  p.name = chi.trivial() ? "P" : "P" + chi.to_string();
  p.contains = [chi](const SVElem& x) { return !x.is_zero() && x.sign == chi(x.value); };
  p.contains_tail = [chi](int sign, const Value&) { return chi.trivial() && sign > 0; };
  p.meets_tail = [chi](int sign, const Value&) { return !chi.trivial() || sign > 0; };
  return p;
}

namespace {

// Compares the first `level` coordinates with zero.
bool prefix_nonneg(const Value& v, int level, bool strict) {
  const Value prefix(v.begin(), v.begin() + level);
  const Value zero(static_cast<std::size_t>(level), 0);
  return strict ? zero < prefix : zero <= prefix;
}

}  // namespace

SymbolicSubset value_cut(int level, bool strict) {
  if (level < 0) throw std::invalid_argument("negative level");
  SymbolicSubset o;
  o.name = std::string(strict ? "M" : "O") + "_" + std::to_string(level);
  o.contains = [=](const SVElem& x) {
    if (static_cast<std::size_t>(level) > x.value.size() && !x.is_zero()) {
      throw std::invalid_argument("level exceeds rank");
    }
    return x.is_zero() || prefix_nonneg(x.value, level, strict);
  };
  o.contains_tail = [=](int, const Value& from) { return prefix_nonneg(from, level, strict); };
  o.meets_tail = [=](int, const Value&) { return level > 0 || !strict; };
  return o;
}

SymbolicSubset whole_carrier() {
  return {"F", [](const SVElem&) { return true; }, [](int, const Value&) { return true; },
          [](int, const Value&) { return true; }};
}

SymbolicSubset only_zero() {
  return {"{0}", [](const SVElem& x) { return x.is_zero(); },
          [](int, const Value&) { return false; }, [](int, const Value&) { return false; }};
}

std::vector<Value> window_values(int k, int bound) {
  std::vector<Value> out{Value{}};
  for (int i = 0; i < k; ++i) {
    std::vector<Value> next;
    for (const Value& prefix : out) {
      for (std::int64_t c = -bound; c <= bound; ++c) {
        Value v = prefix;
        v.push_back(c);
        next.push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<SVElem> window_elements(int k, int bound) {
  std::vector<SVElem> out{SVElem::zero()};
  for (const Value& g : window_values(k, bound)) {
    out.push_back({1, g});
    out.push_back({-1, g});
  }
  return out;
}

std::vector<Value> probe_values(int k) {
  std::vector<Value> out{Value{}};
  for (int i = 0; i < k; ++i) {
    const int r = i == 0 ? 3 : 1;
    std::vector<Value> next;
    for (const Value& prefix : out) {
      for (std::int64_t q = -r; q <= r; ++q) {
        for (std::int64_t e : {0, 1}) {
          Value v = prefix;
          v.push_back(4 * q + e);
          next.push_back(v);
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<SVElem> probe_elements(int k) {
  std::vector<SVElem> out{SVElem::zero()};
  for (const Value& g : probe_values(k)) {
    out.push_back({1, g});
    out.push_back({-1, g});
  }
  return out;
}

SignValueHyperfield::SignValueHyperfield(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("rank must be positive");
}

void SignValueHyperfield::check(const SVElem& x) const {
  if (!x.is_zero() && (x.value.size() != static_cast<std::size_t>(k_) ||
                       (x.sign != 1 && x.sign != -1))) {
    throw std::invalid_argument("element " + x.to_string() + " does not belong to " + name());
  }
}

SVSet SignValueHyperfield::set_add(const SVSet& a, const SVSet& b) const {
  SVSet out;
  if (a.empty() || b.empty()) return out;
  if (a.has_zero()) out.unite(b);
  if (b.has_zero()) out.unite(a);
  for (const SVElem& x : a.points()) {
    for (const SVElem& y : b.points()) out.unite(add(x, y));
    for (int sign : {1, -1}) {
      if (b.tail_from(sign)) out.unite(add_point_tail(x, sign, *b.tail_from(sign)));
    }
  }
  for (int sign : {1, -1}) {
    if (!a.tail_from(sign)) continue;
    const Value& from = *a.tail_from(sign);
    for (const SVElem& y : b.points()) out.unite(add_point_tail(y, sign, from));
    for (int other : {1, -1}) {
      if (b.tail_from(other)) out.unite(add_tail_tail(sign, from, other, *b.tail_from(other)));
    }
  }
  return out;
}

SVElem SignValueHyperfield::mul(const SVElem& x, const SVElem& y) const {
  check(x);
  check(y);
  if (x.is_zero() || y.is_zero()) return SVElem::zero();
  return {x.sign * y.sign, add_values(x.value, y.value)};
}

SVSet SignValueHyperfield::set_mul(const SVSet& a, const SVSet& b) const {
  SVSet out;
  if (a.empty() || b.empty()) return out;
  if (a.has_zero() || b.has_zero()) out.insert(SVElem::zero());
  for (const SVElem& x : a.points()) {
    for (const SVElem& y : b.points()) out.insert(mul(x, y));
    for (int sign : {1, -1}) {
      if (b.tail_from(sign)) out.insert_tail(x.sign * sign, add_values(x.value, *b.tail_from(sign)));
    }
  }
  for (int sign : {1, -1}) {
    if (!a.tail_from(sign)) continue;
    const Value& from = *a.tail_from(sign);
    for (const SVElem& y : b.points()) out.insert_tail(sign * y.sign, add_values(from, y.value));
    for (int other : {1, -1}) {
      if (b.tail_from(other)) out.insert_tail(sign * other, add_values(from, *b.tail_from(other)));
    }
  }
  return out;
}

SVSet SignValueHyperfield::set_neg(const SVSet& a) const {
  return set_mul(a, SVSet::of(make_elem(-1, zero_value(k_))));
}

SVElem SignValueHyperfield::inv(const SVElem& x) const {
  check(x);
  if (x.is_zero()) throw std::invalid_argument("zero has no inverse");
  return {x.sign, negate_value(x.value)};
}

}  // namespace hfw::sym
