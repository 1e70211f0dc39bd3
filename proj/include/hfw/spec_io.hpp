#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "hfw/structure.hpp"

namespace hfw::io {

/// Malformed or unsupported structure spec.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An infinite structure handled symbolically.
struct SymbolicSpec {
  enum class Kind { sgntrop, q_p_units, q_squares };
  Kind kind = Kind::sgntrop;
  int k = 1;  // rank of Z^k for sgntrop
  int p = 2;  // prime for q_p_units
  std::string name() const;
};

using LoadedStructure = std::variant<FiniteHyperstructure, SymbolicSpec>;

/// Accepts a table object {name, carrier, zero, one, neg, mul, add} (entries
/// given as labels or indices) or a builder object with "kind" in
/// {table, factor_fp, builtin}.
LoadedStructure load_structure(const nlohmann::json& spec);
LoadedStructure load_structure_file(const std::string& path);

FiniteHyperstructure table_from_json(const nlohmann::json& spec);
/// Table format with labels for every entry.
nlohmann::json to_json(const FiniteHyperstructure& h);

}  // namespace hfw::io
