#include "hfw/spec_io.hpp"

#include <fstream>

#include "hfw/factor.hpp"
#include "hfw/qfactor.hpp"

namespace hfw::io {

using nlohmann::json;

std::string SymbolicSpec::name() const {
  switch (kind) {
    case Kind::sgntrop:
      return "sgntrop(" + std::to_string(k) + ")";
    case Kind::q_p_units:
      return "q_p_units(" + std::to_string(p) + ")";
    case Kind::q_squares:
      return "q_squares";
  }
  return "?";
}

namespace {

const json& field(const json& spec, const char* key) {
  if (!spec.is_object() || !spec.contains(key)) {
    throw SpecError(std::string("missing field '") + key + "'");
  }
  return spec.at(key);
}

Element element(const json& v, const std::vector<std::string>& labels) {
  if (v.is_number_integer()) {
    const auto i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= labels.size()) {
      throw SpecError("element index out of range");
    }
    return static_cast<Element>(i);
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == s) return static_cast<Element>(i);
    }
    throw SpecError("unknown element label '" + s + "'");
  }
  throw SpecError("element must be a label or an index");
}

}  // namespace

FiniteHyperstructure table_from_json(const json& spec) {
  try {
    std::vector<std::string> labels;
    for (const auto& l : field(spec, "carrier")) {
      if (!l.is_string()) throw SpecError("carrier labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    const std::size_t n = labels.size();
    if (n == 0) throw SpecError("empty carrier");
    const std::string name = spec.value("name", std::string("table"));
    const Element zero = element(field(spec, "zero"), labels);
    std::optional<Element> one;
    if (spec.contains("one") && !spec.at("one").is_null()) one = element(spec.at("one"), labels);

    const json& jneg = field(spec, "neg");
    const json& jmul = field(spec, "mul");
    const json& jadd = field(spec, "add");
    if (!jneg.is_array() || jneg.size() != n || !jmul.is_array() || jmul.size() != n ||
        !jadd.is_array() || jadd.size() != n) {
      throw SpecError("tables must have one row per carrier element");
    }
    std::vector<Element> neg;
    std::vector<std::vector<Element>> mul(n);
    std::vector<std::vector<HSet>> add(n);
    for (std::size_t i = 0; i < n; ++i) {
      neg.push_back(element(jneg[i], labels));
      if (!jmul[i].is_array() || jmul[i].size() != n || !jadd[i].is_array() ||
          jadd[i].size() != n) {
        throw SpecError("table row has the wrong length");
      }
      for (std::size_t j = 0; j < n; ++j) {
        mul[i].push_back(element(jmul[i][j], labels));
        HSet s;
        if (!jadd[i][j].is_array()) throw SpecError("sum entries must be arrays");
        for (const auto& z : jadd[i][j]) s.insert(element(z, labels));
        add[i].push_back(s);
      }
    }
    return FiniteHyperstructure(name, labels, zero, one, neg, mul, add);
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed table: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("invalid table: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw SpecError(std::string("invalid table: ") + e.what());
  }
}

json to_json(const FiniteHyperstructure& h) {
  const auto& labels = h.labels();
  json out;
  out["name"] = h.name();
  out["carrier"] = labels;
  out["zero"] = labels[h.zero()];
  out["one"] = h.one() ? json(labels[*h.one()]) : json(nullptr);
  json neg = json::array(), mul = json::array(), add = json::array();
  for (Element x = 0; x < h.size(); ++x) {
    neg.push_back(labels[h.neg(x)]);
    json mrow = json::array(), arow = json::array();
    for (Element y = 0; y < h.size(); ++y) {
      mrow.push_back(labels[h.mul(x, y)]);
      json sum = json::array();
      for (Element z : h.add(x, y)) sum.push_back(labels[z]);
      arow.push_back(sum);
    }
    mul.push_back(mrow);
    add.push_back(arow);
  }
  out["neg"] = neg;
  out["mul"] = mul;
  out["add"] = add;
  return out;
}

LoadedStructure load_structure(const json& spec) {
  if (!spec.is_object()) throw SpecError("structure spec must be a JSON object");
  const std::string kind = spec.contains("kind") ? spec.at("kind").get<std::string>() : "table";
  try {
    if (kind == "table") return table_from_json(spec);
    if (kind == "factor_fp") {
      const int p = field(spec, "p").get<int>();
      const auto gens = field(spec, "generators").get<std::vector<int>>();
      const auto t = construct::SubgroupSpec::from_generators(p, gens);
      return construct::factor_hyperfield(p, t);
    }
    if (kind == "builtin") {
      const auto name = field(spec, "name").get<std::string>();
      if (name == "sign") return builtin::sign_hyperfield();
      if (name == "krasner") return builtin::krasner_hyperfield();
      if (name == "q_pos") return construct::q_positives_hyperfield();
      if (name == "sgntrop") {
        const int k = spec.value("k", 1);
        if (k < 1 || k > 3) throw SpecError("sgntrop rank must be 1, 2 or 3");
        return SymbolicSpec{SymbolicSpec::Kind::sgntrop, k, 2};
      }
      if (name == "q_p_units") {
        const int p = spec.value("p", 2);
        if (p > 7 || p < 2 || (p != 2 && p != 3 && p != 5 && p != 7)) {
          throw SpecError("q_p_units needs a prime p <= 7");
        }
        return SymbolicSpec{SymbolicSpec::Kind::q_p_units, 1, p};
      }
      if (name == "q_squares") return SymbolicSpec{SymbolicSpec::Kind::q_squares, 1, 2};
      throw SpecError("unknown builtin '" + name + "'");
    }
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("invalid spec: ") + e.what());
  }
  throw SpecError("unknown structure kind '" + kind + "'");
}

LoadedStructure load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  json spec;
  try {
    in >> spec;
  } catch (const json::exception& e) {
    throw SpecError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return load_structure(spec);
}

}  // namespace hfw::io
