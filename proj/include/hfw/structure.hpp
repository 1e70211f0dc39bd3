#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfw/hset.hpp"

namespace hfw {

/// Raised for an element index outside the carrier.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when two routes that must agree (e.g. a definition and its
/// characterization) disagree. Always indicates a bug.
class EquivalenceError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A finite carrier with negation, multiplication and set-valued addition,
/// all stored as dense tables. Axioms are not assumed; use the checkers in
/// axioms.hpp.
class FiniteHyperstructure {
 public:
  FiniteHyperstructure(std::string name, std::vector<std::string> labels, Element zero,
                       std::optional<Element> one, std::vector<Element> neg,
                       std::vector<std::vector<Element>> mul,
                       std::vector<std::vector<HSet>> add);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const;
  /// Index of the element with the given label.
  Element index_of(const std::string& label) const;

  Element zero() const { return zero_; }
  const std::optional<Element>& one() const { return one_; }
  Element one_or_throw() const;

  Element neg(Element x) const;
  Element mul(Element x, Element y) const;
  const HSet& add(Element x, Element y) const;

  HSet carrier() const { return HSet::full(size()); }
  HSet nonzero() const { return carrier() - HSet{zero_}; }
  bool contains(Element x) const { return x < size(); }
  /// Multiplicative inverse read off the table, if one exists.
  std::optional<Element> inverse(Element x) const;

  // Single-cell patches returning a modified copy; used by mutation tests.
  FiniteHyperstructure with_add(Element x, Element y, HSet value) const;
  FiniteHyperstructure with_mul(Element x, Element y, Element value) const;
  FiniteHyperstructure with_neg(Element x, Element value) const;
  FiniteHyperstructure renamed(std::string name) const;

  std::string format(const HSet& s) const;

  friend bool operator==(const FiniteHyperstructure& a, const FiniteHyperstructure& b) {
    return a.labels_ == b.labels_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.neg_ == b.neg_ &&
           a.mul_ == b.mul_ && a.add_ == b.add_;
  }

 private:
  void check(Element x) const;

  std::string name_;
  std::vector<std::string> labels_;
  Element zero_;
  std::optional<Element> one_;
  std::vector<Element> neg_;
  std::vector<std::vector<Element>> mul_;
  std::vector<std::vector<HSet>> add_;
};

/// A + B: union of x + y over x in A, y in B.
HSet set_add(const FiniteHyperstructure& h, const HSet& a, const HSet& b);
/// x + y, with index validation.
HSet hyper_add(const FiniteHyperstructure& h, Element x, Element y);
/// {a * b : a in A, b in B}
HSet set_mul(const FiniteHyperstructure& h, const HSet& a, const HSet& b);
HSet set_neg(const FiniteHyperstructure& h, const HSet& a);

namespace builtin {

/// {0, 1, -1} with 1 + 1 = {1}, 1 - 1 = {-1, 0, 1}.
FiniteHyperstructure sign_hyperfield();
/// {0, 1} with 1 + 1 = {0, 1}.
FiniteHyperstructure krasner_hyperfield();
/// The prime field F_p with singleton sums.
FiniteHyperstructure prime_field(int p);
/// The one-element zero ring.
FiniteHyperstructure zero_ring();

}  // namespace builtin

}  // namespace hfw
