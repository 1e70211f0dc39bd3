#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hfw::sym {

/// An element of Z^k under the lexicographic order.
using Value = std::vector<std::int64_t>;

std::string format_value(const Value& v);
Value zero_value(int k);
Value unit_vector(int k, int i);
Value add_values(const Value& a, const Value& b);
Value negate_value(const Value& a);
/// Largest value below v: the last coordinate decremented.
Value predecessor(const Value& v);

/// Zero, or a pair (sign, value) with sign in {+1, -1}.
struct SVElem {
  int sign = 0;
  Value value;

  static SVElem zero() { return {}; }
  bool is_zero() const { return sign == 0; }
  std::string to_string() const;
  friend auto operator<=>(const SVElem&, const SVElem&) = default;
};

SVElem make_elem(int sign, Value value);
SVElem operator-(const SVElem& x);

/// A possibly infinite subset of a sign-value carrier: optional zero, for each
/// sign an optional tail {(s, d) : d >= from}, and finitely many further
/// points. Kept canonical so that equal sets compare equal: points inside a
/// tail are dropped, and a point just below a tail is absorbed into it.
class SVSet {
 public:
  SVSet() = default;
  static SVSet of(const SVElem& x);
  static SVSet of(std::initializer_list<SVElem> xs);
  /// {0} together with both tails from `from`.
  static SVSet ball(const Value& from);
  static SVSet tail(int sign, const Value& from);

  bool has_zero() const { return zero_; }
  const std::optional<Value>& tail_from(int sign) const { return tails_[index(sign)]; }
  const std::set<SVElem>& points() const { return points_; }

  void insert(const SVElem& x);
  void insert_tail(int sign, const Value& from);
  void unite(const SVSet& other);

  bool contains(const SVElem& x) const;
  bool empty() const;
  bool finite() const { return !tails_[0] && !tails_[1]; }
  bool subset_of(const SVSet& other) const;
  bool intersects(const SVSet& other) const;
  bool is_ball() const;
  /// Members with every coordinate of the value in [-bound, bound].
  std::vector<SVElem> members_within(int k, int bound) const;
  std::string to_string() const;

  friend bool operator==(const SVSet&, const SVSet&) = default;

 private:
  static std::size_t index(int sign) { return sign > 0 ? 0 : 1; }
  void normalize();

  bool zero_ = false;
  std::array<std::optional<Value>, 2> tails_;
  std::set<SVElem> points_;
};

/// A character Z^k -> {+1, -1} given by the images of the unit vectors.
struct SignCharacter {
  std::vector<int> images;
  int operator()(const Value& g) const;
  bool trivial() const;
  std::string to_string() const;
  friend auto operator<=>(const SignCharacter&, const SignCharacter&) = default;
};
/// All 2^k characters, trivial first.
std::vector<SignCharacter> all_characters(int k);

/// A subset of the carrier described by decidable predicates, enough to test
/// containment and intersection against an SVSet.
struct SymbolicSubset {
  std::string name;
  std::function<bool(const SVElem&)> contains;
  /// Whether the whole tail {(sign, d) : d >= from} lies inside.
  std::function<bool(int, const Value&)> contains_tail;
  /// Whether the tail meets the subset.
  std::function<bool(int, const Value&)> meets_tail;
};

bool subset_of(const SVSet& s, const SymbolicSubset& t);
bool meets(const SVSet& s, const SymbolicSubset& t);

/// {(s, g) : s = chi(g)}
SymbolicSubset character_ordering(const SignCharacter& chi);
/// Elements whose first `level` coordinates are >= 0 (strict: > 0) in the lex
/// order, plus zero. Level 0 gives everything (strict: only zero).
SymbolicSubset value_cut(int level, bool strict);
SymbolicSubset whole_carrier();
SymbolicSubset only_zero();

/// Values of Z^k with every coordinate in [-bound, bound], ascending.
std::vector<Value> window_values(int k, int bound);
/// Zero followed by (+, g), (-, g) for each window value g.
std::vector<SVElem> window_elements(int k, int bound);
/// Values (4 r_1 + e_1, 4 r_2 + e_2, ...) with e_i in {0, 1}, r_1 in [-3, 3]
/// and r_i in [-1, 1] otherwise. They realize every order relation between
/// pairs and pairwise sums together with every parity pattern, which is all
/// the case analysis of the addition rules and of characters depends on.
std::vector<Value> probe_values(int k);
std::vector<SVElem> probe_elements(int k);

/// Hyperfield on {0} and {+1, -1} x Z^k with (s, g)(t, h) = (st, g + h).
/// Subclasses supply the addition.
class SignValueHyperfield {
 public:
  explicit SignValueHyperfield(int k);
  virtual ~SignValueHyperfield() = default;

  int rank() const { return k_; }
  virtual std::string name() const = 0;

  /// x + y for two elements.
  virtual SVSet add(const SVElem& x, const SVElem& y) const = 0;
  /// Union of x + (sign, d) over d >= from.
  virtual SVSet add_point_tail(const SVElem& x, int sign, const Value& from) const = 0;
  /// Union of (s1, d1) + (s2, d2) over d1 >= f1, d2 >= f2.
  virtual SVSet add_tail_tail(int s1, const Value& f1, int s2, const Value& f2) const = 0;

  SVSet set_add(const SVSet& a, const SVSet& b) const;
  SVElem mul(const SVElem& x, const SVElem& y) const;
  SVSet set_mul(const SVSet& a, const SVSet& b) const;
  SVSet set_neg(const SVSet& a) const;
  SVElem inv(const SVElem& x) const;
  SVElem one() const { return make_elem(1, zero_value(k_)); }
  void check(const SVElem& x) const;

 private:
  int k_;
};

}  // namespace hfw::sym
