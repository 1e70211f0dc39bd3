#include "hfw/reports.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "hfw/axioms.hpp"
#include "hfw/compat.hpp"
#include "hfw/enumerate.hpp"
#include "hfw/punits.hpp"
#include "hfw/qfactor.hpp"
#include "hfw/realalg.hpp"
#include "hfw/sgntrop.hpp"
#include "hfw/symbolic_analysis.hpp"
#include "hfw/theorems.hpp"
#include "hfw/valtheory.hpp"

namespace hfw::cli {

using nlohmann::json;

namespace {

json labels(const FiniteHyperstructure& h, const HSet& s) {
  json out = json::array();
  for (Element x : s) out.push_back(h.label(x));
  return out;
}

json labels(const FiniteHyperstructure& h, const std::vector<Element>& xs) {
  json out = json::array();
  for (Element x : xs) out.push_back(h.label(x));
  return out;
}

json violations(const FiniteHyperstructure& h, const ViolationReport& r) {
  json out = json::array();
  for (const Violation& v : r.violations()) {
    out.push_back({{"axiom", v.axiom}, {"witness", labels(h, v.witness)}, {"detail", v.detail}});
  }
  return out;
}

json violations(const ViolationReport& r) {
  json out = json::array();
  for (const Violation& v : r.violations()) out.push_back({{"axiom", v.axiom}, {"detail", v.detail}});
  return out;
}

json elems(const std::vector<sym::SVElem>& xs) {
  json out = json::array();
  for (const sym::SVElem& x : xs) out.push_back(x.to_string());
  return out;
}

json character(const sym::SignCharacter& chi) { return chi.images; }

json character(const compat::Character& chi) { return chi.images; }

json value_group(const val::ValueGroup& g) {
  json out = {{"kind", g.kind() == val::ValueGroup::Kind::lex ? "lex" : "quotient"}};
  if (g.kind() == val::ValueGroup::Kind::lex) {
    out["rank"] = g.rank();
  } else {
    out["order"] = g.order();
    out["elements"] = g.names();
  }
  return out;
}

json header(const std::string& command, const std::string& structure) {
  return {{"command", command}, {"structure", structure}};
}

std::unique_ptr<sym::SignValueHyperfield> make_symbolic(const io::SymbolicSpec& s) {
  switch (s.kind) {
    case io::SymbolicSpec::Kind::sgntrop:
      return std::make_unique<sym::SignedTropical>(s.k);
    case io::SymbolicSpec::Kind::q_p_units:
      return std::make_unique<sym::PUnitHyperfield>(s.p);
    case io::SymbolicSpec::Kind::q_squares:
      break;
  }
  return nullptr;
}

sym::Quantifier quantifier(const Options& o) { return {o.window, true}; }

bool is_squares(const io::SymbolicSpec& s) { return s.kind == io::SymbolicSpec::Kind::q_squares; }

[[noreturn]] void unsupported(const std::string& command, const std::string& structure) {
  throw io::SpecError(command + " is not available for " + structure);
}

// Valuation levels handled symbolically: trivial and full rank.
std::vector<int> symbolic_levels(const sym::SignValueHyperfield& h) { return {0, h.rank()}; }

json condition(const FiniteHyperstructure& h, const compat::Condition& c) {
  return {{"holds", c.holds}, {"witness", labels(h, c.witness)}, {"detail", c.detail}};
}

json condition(const sym::SymCondition& c) {
  return {{"holds", c.holds}, {"witness", elems(c.witness)}, {"detail", c.detail}};
}

const char* const kConditionNames[4] = {"i", "ii", "iii", "iv"};

}  // namespace

std::string digest(const json& spec) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : spec.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

// ---- check ----

namespace {

CommandResult check_finite(const FiniteHyperstructure& h) {
  CommandResult r{header("check", h.name())};
  const ViolationReport hg = check_canonical_hypergroup(h);
  const ViolationReport hr = check_hyperring(h);
  const ViolationReport hf = check_hyperfield(h);
  const DoubleDistributivity dd = check_double_distributivity(h);
  json& f = r.report["findings"];
  f["canonical_hypergroup"] = {{"ok", hg.empty()}, {"violations", violations(h, hg)}};
  f["hyperring"] = {{"ok", hr.empty()}, {"violations", violations(h, hr)}};
  f["hyperfield"] = {{"ok", hf.empty()}, {"violations", violations(h, hf)}};
  json eq = json::array();
  for (std::size_t i = 0; i < dd.equality_failures.size() && i < 5; ++i) {
    const auto& q = dd.equality_failures[i];
    eq.push_back(labels(h, std::vector<Element>(q.begin(), q.end())));
  }
  f["double_distributivity"] = {{"inclusion", dd.inclusion_ok},
                                {"equality_failures", dd.equality_failures.size()},
                                {"equality_examples", eq}};
  f["integral_hyperdomain"] = hr.empty() && is_integral_hyperdomain(h);
  if (!hg.empty() || !hr.empty() || !hf.empty() || !dd.inclusion_ok) r.exit_code = kCheckFailed;
  return r;
}

// Bounded sanity checks on Q/squares: commutativity and 0 in x + y iff y = -x.
CommandResult check_squares(const Options& o) {
  CommandResult r{header("check", "q_squares")};
  const construct::QSubgroup t = construct::QSubgroup::squares();
  std::vector<construct::QClass> classes;
  for (int sign : {1, -1}) {
    for (std::int64_t key : {1, 2, 3, 5, 6, 7}) classes.push_back({sign, key});
  }
  json problems = json::array();
  for (const auto& x : classes) {
    for (const auto& y : classes) {
      const auto xy = construct::q_factor_sum(x, y, t, o.height);
      const auto yx = construct::q_factor_sum(y, x, t, o.height);
      const std::string pair = construct::q_label(x, t) + " " + construct::q_label(y, t);
      if (xy.members != yx.members) problems.push_back("H2 " + pair);
      const bool opposite = x.key == y.key && x.sign == -y.sign;
      if (xy.contains({}) != opposite) problems.push_back("H3 " + pair);
    }
  }
  r.report["findings"] = {{"height", o.height}, {"classes", classes.size()}, {"violations", problems}};
  if (!problems.empty()) r.exit_code = kCheckFailed;
  return r;
}

}  // namespace

CommandResult cmd_check(const io::LoadedStructure& s, const Options& o) {
  if (const auto* h = std::get_if<FiniteHyperstructure>(&s)) return check_finite(*h);
  const auto& spec = std::get<io::SymbolicSpec>(s);
  if (is_squares(spec)) return check_squares(o);
  const auto h = make_symbolic(spec);
  CommandResult r{header("check", h->name())};
  const ViolationReport rep = sym::check_axioms(*h, o.window);
  r.report["findings"] = {{"window", o.window}, {"ok", rep.empty()}, {"violations", violations(rep)}};
  if (!rep.empty()) r.exit_code = kCheckFailed;
  return r;
}

// ---- factor ----

CommandResult cmd_factor(const io::LoadedStructure& s, const Options& o) {
  if (const auto* h = std::get_if<FiniteHyperstructure>(&s)) {
    CommandResult r{header("factor", h->name())};
    r.report["table"] = io::to_json(*h);
    return r;
  }
  const auto& spec = std::get<io::SymbolicSpec>(s);
  if (spec.kind == io::SymbolicSpec::Kind::sgntrop) unsupported("factor", spec.name());
  const construct::QSubgroup t = is_squares(spec) ? construct::QSubgroup::squares()
                                                  : construct::QSubgroup::positive_p_units(spec.p);
  std::vector<construct::QClass> classes;
  for (int sign : {1, -1}) {
    if (is_squares(spec)) {
      for (std::int64_t key : {1, 2, 3, 5, 6, 7}) classes.push_back({sign, key});
    } else {
      for (std::int64_t v = -1; v <= 1; ++v) classes.push_back({sign, v});
    }
  }
  CommandResult r{header("factor", spec.name())};
  json rows = json::array();
  for (const auto& x : classes) {
    for (const auto& y : classes) {
      const auto sum = construct::q_factor_sum(x, y, t, o.height);
      json members = json::array();
      for (const auto& c : sum.members) members.push_back(construct::q_label(c, t));
      json rays = json::array();
      for (const auto& ray : sum.rays) {
        rays.push_back(std::string(ray.sign > 0 ? "+" : "-") + ">=" + std::to_string(ray.from));
      }
      rows.push_back({{"x", construct::q_label(x, t)},
                      {"y", construct::q_label(y, t)},
                      {"members", members},
                      {"rays", rays},
                      {"complete", sum.complete}});
    }
  }
  r.report["height"] = o.height;
  r.report["sums"] = rows;
  return r;
}

// ---- orderings ----

CommandResult cmd_orderings(const io::LoadedStructure& s, const Options& o) {
  if (const auto* hp = std::get_if<FiniteHyperstructure>(&s)) {
    const FiniteHyperstructure& h = *hp;
    CommandResult r{header("orderings", h.name())};
    const auto orders = real::enumerate_orderings(h);
    if (h.nonzero().size() <= 20 && real::enumerate_orderings_exhaustive(h) != orders) {
      throw EquivalenceError("ordering enumeration disagrees with exhaustive search");
    }
    const real::Realness re = real::is_real(h);
    if (re.real != !orders.empty()) {
      throw EquivalenceError("realness disagrees with ordering enumeration");
    }
    json list = json::array();
    for (const HSet& p : orders) {
      list.push_back({{"members", labels(h, p)},
                      {"archimedean", real::is_archimedean(h, p)},
                      {"A", labels(h, real::A_of_P(h, p))},
                      {"I", labels(h, real::I_of_P(h, p))},
                      {"residue_archimedean", compat::residue_ordering_archimedean(h, p)}});
    }
    r.report["real"] = re.real;
    r.report["sums_of_squares"] = labels(h, re.sums_of_squares);
    r.report["minus_one_length"] = re.minus_one_length ? json(*re.minus_one_length) : json(nullptr);
    r.report["orderings"] = list;
    return r;
  }
  const auto& spec = std::get<io::SymbolicSpec>(s);
  if (is_squares(spec)) {
    CommandResult r{header("orderings", spec.name())};
    const thm::ArchimedeanCheck arch = thm::q_squares_archimedean(o.height);
    const thm::SevenCertificate seven = thm::q_squares_seven(o.height);
    r.report["real"] = true;
    r.report["orderings"] = json::array({{{"members", "positive classes"},
                                          {"archimedean", arch.failures == 0},
                                          {"classes_checked", arch.classes}}});
    r.report["sums_of_squares"] = {{"I4_is_positive_cone", arch.i4_is_positive_cone},
                                   {"seven_in_I2", seven.in_I2},
                                   {"seven_in_I3", seven.in_I3},
                                   {"seven_in_I4", seven.in_I4}};
    return r;
  }
  const auto h = make_symbolic(spec);
  const sym::Quantifier q = quantifier(o);
  CommandResult r{header("orderings", h->name())};
  json list = json::array();
  for (const sym::SignCharacter& chi : sym::enumerate_orderings(*h, q)) {
    const sym::SymbolicSubset p = sym::character_ordering(chi);
    const bool arch =
        sym::compare_hull(*h, p, sym::whole_carrier(), sym::only_zero(), q).agree();
    list.push_back({{"character", character(chi)},
                    {"archimedean", arch},
                    {"residue_archimedean", sym::residue_ordering_archimedean(*h, p, q)}});
  }
  r.report["real"] = sym::sums_of_squares_avoid_minus_one(*h, o.window);
  r.report["window"] = o.window;
  r.report["orderings"] = list;
  return r;
}

// ---- valuations ----

CommandResult cmd_valuations(const io::LoadedStructure& s, const Options& o) {
  if (const auto* hp = std::get_if<FiniteHyperstructure>(&s)) {
    const FiniteHyperstructure& h = *hp;
    CommandResult r{header("valuations", h.name())};
    json list = json::array();
    for (const HSet& ring : val::enumerate_valuation_hyperrings(h)) {
      const val::Valuation v = val::valuation_from_hyperring(h, ring);
      const val::ValuationRing back = val::ring_from_valuation(h, v);
      if (back.o != ring) throw EquivalenceError("O -> v -> O_v does not return O");
      const auto res = val::residue_hyperfield(h, ring);
      const ViolationReport def = val::is_valuation_hyperring(h, ring);
      list.push_back({{"ring", labels(h, ring)},
                      {"maximal_ideal", labels(h, back.m)},
                      {"strict", !def.has("strict")},
                      {"value_group", value_group(v.group)},
                      {"residue", res.structure.labels()}});
    }
    r.report["valuation_rings"] = list;
    return r;
  }
  const auto& spec = std::get<io::SymbolicSpec>(s);
  if (is_squares(spec)) unsupported("valuations", spec.name());
  const auto h = make_symbolic(spec);
  const sym::Quantifier q = quantifier(o);
  CommandResult r{header("valuations", h->name())};
  json list = json::array();
  for (int level = 0; level <= h->rank(); ++level) {
    const sym::SymValuation v{level, {}};
    const ViolationReport def = sym::is_valuation_hyperring(*h, v.ring(), q);
    const sym::RoundTrip rt = sym::valuation_round_trip(*h, v, q);
    if (!rt.failures.empty()) throw EquivalenceError("valuation round trip: " + rt.failures.front());
    json row = {{"ring", v.ring().name},
                {"ideal", v.ideal().name},
                {"valuation_hyperring", def.empty()},
                {"violations", violations(def)},
                {"value_group", {{"kind", "lex"}, {"rank", level}}}};
    if (level == h->rank() && level > 0) row["residue"] = sym::residue(*h, q).structure.labels();
    list.push_back(row);
  }
  r.report["valuation_rings"] = list;
  return r;
}

// ---- compat ----

CommandResult cmd_compat(const io::LoadedStructure& s, const Options& o) {
  if (const auto* hp = std::get_if<FiniteHyperstructure>(&s)) {
    const FiniteHyperstructure& h = *hp;
    CommandResult r{header("compat", h.name())};
    json cells = json::array();
    for (const HSet& p : real::enumerate_orderings(h)) {
      for (const HSet& ring : val::enumerate_valuation_hyperrings(h)) {
        const compat::CompatReport rep =
            compat::compatibility_report(h, val::valuation_from_hyperring(h, ring), p);
        json cell = {{"ordering", labels(h, p)}, {"ring", labels(h, ring)}};
        for (std::size_t i = 0; i < 4; ++i) {
          cell["conditions"][kConditionNames[i]] = condition(h, rep.conditions[i]);
        }
        cell["agree"] = rep.agree();
        cell["compatible"] = rep.compatible();
        if (!rep.agree()) r.exit_code = kEquivalenceError;
        cells.push_back(cell);
      }
    }
    r.report["cells"] = cells;
    return r;
  }
  const auto& spec = std::get<io::SymbolicSpec>(s);
  if (is_squares(spec)) unsupported("compat", spec.name());
  const auto h = make_symbolic(spec);
  const sym::Quantifier q = quantifier(o);
  CommandResult r{header("compat", h->name())};
  json cells = json::array();
  for (const sym::SignCharacter& chi : sym::enumerate_orderings(*h, q)) {
    for (int level : symbolic_levels(*h)) {
      const sym::SymValuation v{level, {}};
      const sym::SymCompatReport rep =
          sym::compatibility_report(*h, v, sym::character_ordering(chi), q);
      json cell = {{"ordering", character(chi)}, {"ring", v.ring().name}};
      for (std::size_t i = 0; i < 4; ++i) {
        cell["conditions"][kConditionNames[i]] = condition(rep.conditions[i]);
      }
      cell["agree"] = rep.agree();
      cell["compatible"] = rep.compatible();
      if (!rep.agree()) r.exit_code = kEquivalenceError;
      cells.push_back(cell);
    }
  }
  r.report["window"] = o.window;
  r.report["cells"] = cells;
  return r;
}

// ---- baer-krull ----

CommandResult cmd_baer_krull(const io::LoadedStructure& s, const Options& o) {
  if (const auto* hp = std::get_if<FiniteHyperstructure>(&s)) {
    const FiniteHyperstructure& h = *hp;
    CommandResult r{header("baer-krull", h.name())};
    json tables = json::array();
    for (const HSet& ring : val::enumerate_valuation_hyperrings(h)) {
      const val::Valuation v = val::valuation_from_hyperring(h, ring);
      const auto bases = compat::baer_krull_bases(h, v);
      const auto chars = compat::characters_of(v.group);
      const auto res = val::residue_hyperfield(h, ring);
      json base_rows = json::array();
      for (const auto& b : bases) {
        base_rows.push_back({{"residue_ordering", labels(res.structure, b.residue_ordering)},
                             {"ordering", labels(h, b.ordering)}});
      }
      json rows = json::array();
      std::size_t compatible = 0;
      for (const HSet& p : real::enumerate_orderings(h)) {
        if (!compat::compatibility_report(h, v, p).compatible()) continue;
        ++compatible;
        const auto img = compat::baer_krull_forward(h, v, p, bases);
        const HSet back = compat::baer_krull_inverse(h, v, img.residue_ordering, img.character, bases);
        if (back != p) throw EquivalenceError("Baer-Krull inverse does not undo forward");
        rows.push_back({{"ordering", labels(h, p)},
                        {"residue_ordering", labels(res.structure, img.residue_ordering)},
                        {"character", character(img.character)}});
      }
      const std::size_t expected = bases.size() * chars.size();
      if (compatible != expected) {
        throw EquivalenceError("compatible orderings (" + std::to_string(compatible) +
                               ") != residue orderings x characters (" + std::to_string(expected) + ")");
      }
      tables.push_back({{"ring", labels(h, ring)},
                        {"value_group", value_group(v.group)},
                        {"characters", chars.size()},
                        {"bases", base_rows},
                        {"rows", rows}});
    }
    r.report["valuations"] = tables;
    return r;
  }
  const auto& spec = std::get<io::SymbolicSpec>(s);
  if (is_squares(spec)) unsupported("baer-krull", spec.name());
  const auto h = make_symbolic(spec);
  const sym::Quantifier q = quantifier(o);
  CommandResult r{header("baer-krull", h->name())};
  const sym::SymResidue res = sym::residue(*h, q);
  const auto residue_orders = real::enumerate_orderings(res.structure);
  json base_rows = json::array();
  json rows = json::array();
  std::size_t compatible = 0;
  const sym::SymValuation v{h->rank(), {}};
  for (const HSet& frak_p : residue_orders) {
    const auto lifts = sym::lift_ordering(*h, res, frak_p, false, q);
    if (lifts.empty()) throw EquivalenceError("residue ordering has no lift");
    base_rows.push_back({{"residue_ordering", labels(res.structure, frak_p)},
                         {"ordering", character(lifts.front())}});
  }
  for (const sym::SignCharacter& chi : sym::enumerate_orderings(*h, q)) {
    if (!sym::compatibility_report(*h, v, sym::character_ordering(chi), q).compatible()) continue;
    ++compatible;
    const HSet frak_p = sym::induced_residue_set(*h, res, sym::character_ordering(chi));
    const auto base = sym::lift_ordering(*h, res, frak_p, false, q).front();
    const auto img = sym::baer_krull_forward(*h, res, chi, base, q);
    if (sym::baer_krull_inverse(*h, img.character, base, q) != chi) {
      throw EquivalenceError("Baer-Krull inverse does not undo forward");
    }
    rows.push_back({{"ordering", character(chi)},
                    {"residue_ordering", labels(res.structure, img.residue_ordering)},
                    {"character", character(img.character)}});
  }
  const std::size_t expected = residue_orders.size() * (std::size_t{1} << h->rank());
  if (compatible != expected) {
    throw EquivalenceError("compatible orderings (" + std::to_string(compatible) +
                           ") != residue orderings x characters (" + std::to_string(expected) + ")");
  }
  r.report["valuations"] = json::array({{{"ring", v.ring().name},
                                         {"value_group", {{"kind", "lex"}, {"rank", h->rank()}}},
                                         {"characters", std::size_t{1} << h->rank()},
                                         {"bases", base_rows},
                                         {"rows", rows}}});
  return r;
}

// ---- enumerate ----

CommandResult cmd_enumerate(const Options& o) {
  if (o.order < 2 || o.order > construct::kMaxEnumerationOrder) {
    throw io::SpecError("--order must lie in [2, " +
                        std::to_string(construct::kMaxEnumerationOrder) + "]");
  }
  CommandResult r{{{"command", "enumerate"}, {"order", o.order}}};
  json by_order = json::array();
  for (std::size_t n = 2; n <= o.order; ++n) {
    json list = json::array();
    for (const FiniteHyperstructure& h : construct::enumerate_hyperfields(n)) {
      const auto orders = real::enumerate_orderings(h);
      list.push_back({{"name", h.name()},
                      {"table", io::to_json(h)},
                      {"orderings", orders.size()},
                      {"valuation_rings", val::enumerate_valuation_hyperrings(h).size()},
                      {"double_distributivity_equalities_fail",
                       !check_double_distributivity(h).equality_failures.empty()}});
    }
    by_order.push_back({{"order", n}, {"count", list.size()}, {"hyperfields", list}});
  }
  r.report["results"] = by_order;
  return r;
}

// ---- dispatch ----

CommandResult run(const std::string& command, const std::optional<json>& spec, const Options& o) {
  static const std::map<std::string, std::function<CommandResult(const io::LoadedStructure&,
                                                                 const Options&)>>
      commands = {{"check", cmd_check},       {"factor", cmd_factor},
                  {"orderings", cmd_orderings}, {"valuations", cmd_valuations},
                  {"compat", cmd_compat},     {"baer-krull", cmd_baer_krull}};
  CommandResult r;
  try {
    if (command == "enumerate") {
      r = cmd_enumerate(o);
    } else {
      const auto it = commands.find(command);
      if (it == commands.end()) throw io::SpecError("unknown command '" + command + "'");
      if (!spec) throw io::SpecError(command + " needs a structure spec");
      r = it->second(io::load_structure(*spec), o);
    }
  } catch (const io::SpecError& e) {
    r = {{{"command", command}, {"error", "spec"}, {"message", e.what()}}, kSpecError};
  } catch (const std::domain_error& e) {
    r = {{{"command", command}, {"error", "unsupported"}, {"message", e.what()}}, kSpecError};
  } catch (const EquivalenceError& e) {
    r = {{{"command", command}, {"error", "equivalence"}, {"message", e.what()}},
         kEquivalenceError};
  }
  r.report["digest"] = digest(json{{"command", command},
                                   {"spec", spec ? *spec : json(nullptr)},
                                   {"height", o.height},
                                   {"window", o.window},
                                   {"order", o.order}});
  r.report["seed"] = o.seed ? json(*o.seed) : json(nullptr);
  r.report["exit_code"] = r.exit_code;
  return r;
}

// ---- text ----

namespace {

bool scalar_list(const json& j) {
  if (!j.is_array()) return false;
  for (const json& x : j) {
    if (x.is_structured()) return false;
  }
  return true;
}

std::string scalar(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    std::size_t width = 0;
    for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) {
      os << pad << k << std::string(width - k.size(), ' ') << " :";
      if (v.is_structured() && !scalar_list(v)) {
        os << "\n";
        render(v, indent + 2, os);
      } else {
        os << " ";
        render(v, 0, os);
      }
    }
  } else if (scalar_list(j)) {
    os << pad << "{";
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << scalar(j[i]);
    os << "}\n";
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad << "[" << i << "]\n";
      render(j[i], indent + 2, os);
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string to_text(const json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

}  // namespace hfw::cli
