#pragma once

#include <map>
#include <string>
#include <vector>

#include "hfw/hset.hpp"

namespace hfw {

struct Violation {
  std::string axiom;
  std::vector<Element> witness;
  std::string detail;
};

/// Axiom violations found by a checker. Keeps at most `cap` witnesses per
/// axiom but counts all of them.
class ViolationReport {
 public:
  static constexpr std::size_t kDefaultCap = 10;

  explicit ViolationReport(std::size_t cap = kDefaultCap) : cap_(cap) {}

  void add(const std::string& axiom, std::vector<Element> witness, std::string detail = {});
  void merge(const ViolationReport& other);

  bool empty() const { return counts_.empty(); }
  bool has(const std::string& axiom) const { return counts_.count(axiom) != 0; }
  std::size_t count(const std::string& axiom) const;
  std::size_t total() const;
  const std::vector<Violation>& violations() const { return violations_; }
  std::vector<std::string> axioms() const;
  std::size_t cap() const { return cap_; }

  std::string summary() const;

 private:
  std::size_t cap_;
  std::vector<Violation> violations_;
  std::map<std::string, std::size_t> counts_;
};

}  // namespace hfw
