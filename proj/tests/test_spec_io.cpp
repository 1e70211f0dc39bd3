#include <gtest/gtest.h>

#include "hfw/axioms.hpp"
#include "hfw/factor.hpp"
#include "hfw/homomorphism.hpp"
#include "hfw/spec_io.hpp"

using namespace hfw;
using nlohmann::json;

namespace {

std::string data(const std::string& f) { return std::string(HFW_TEST_DATA) + "/" + f; }

FiniteHyperstructure finite(const std::string& f) {
  return std::get<FiniteHyperstructure>(io::load_structure_file(data(f)));
}

io::SymbolicSpec symbolic(const std::string& f) {
  return std::get<io::SymbolicSpec>(io::load_structure_file(data(f)));
}

}  // namespace

TEST(SpecIO, BuiltinsLoad) {
  EXPECT_EQ(finite("sign.json"), builtin::sign_hyperfield());
  EXPECT_EQ(finite("krasner.json"), builtin::krasner_hyperfield());
  EXPECT_EQ(finite("q_pos.json").size(), 3U);
  const FiniteHyperstructure f7 = finite("f7_squares.json");
  EXPECT_EQ(f7.size(), 3U);
  EXPECT_TRUE(check_hyperfield(f7).empty());
  EXPECT_TRUE(find_isomorphism(f7, construct::factor_hyperfield(7, construct::squares_subgroup(7))));
}

TEST(SpecIO, SymbolicSpecsLoad) {
  EXPECT_EQ(symbolic("sgntrop1.json").kind, io::SymbolicSpec::Kind::sgntrop);
  EXPECT_EQ(symbolic("sgntrop2.json").k, 2);
  const io::SymbolicSpec pu = symbolic("punits2.json");
  EXPECT_EQ(pu.kind, io::SymbolicSpec::Kind::q_p_units);
  EXPECT_EQ(pu.p, 2);
  EXPECT_EQ(symbolic("q_squares.json").kind, io::SymbolicSpec::Kind::q_squares);
  EXPECT_NE(symbolic("sgntrop1.json").name(), symbolic("sgntrop2.json").name());
}

TEST(SpecIO, MalformedSpecsAreRejected) {
  EXPECT_THROW(io::load_structure_file(data("bad_builder.json")), io::SpecError);
  EXPECT_THROW(io::load_structure_file(data("missing_field.json")), io::SpecError);
  EXPECT_THROW(io::load_structure_file(data("no_such_file.json")), io::SpecError);
  EXPECT_THROW(io::load_structure(json{{"kind", "nonsense"}}), io::SpecError);
  EXPECT_THROW(io::load_structure(json::array()), io::SpecError);
  json t = io::to_json(builtin::sign_hyperfield());
  t["mul"][1][1] = "7";
  EXPECT_THROW(io::table_from_json(t), io::SpecError);
  json short_neg = io::to_json(builtin::sign_hyperfield());
  short_neg["neg"].erase(0);
  EXPECT_THROW(io::table_from_json(short_neg), io::SpecError);
}

TEST(SpecIO, TablesLoadWithLabels) {
  const FiniteHyperstructure s = finite("sign_table.json");
  EXPECT_EQ(s, builtin::sign_hyperfield());
  // A broken table still loads; the axiom checker reports it.
  const FiniteHyperstructure b = finite("broken_table.json");
  EXPECT_FALSE(check_hyperfield(b).empty());
}

TEST(SpecIO, TablesLoadWithIndices) {
  const json j = {{"name", "sign"},
                  {"carrier", {"0", "1", "-1"}},
                  {"zero", 0},
                  {"one", 1},
                  {"neg", {0, 2, 1}},
                  {"mul", {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}},
                  {"add", {{{0}, {1}, {2}}, {{1}, {1}, {0, 1, 2}}, {{2}, {0, 1, 2}, {2}}}}};
  EXPECT_EQ(io::table_from_json(j), builtin::sign_hyperfield());
}

TEST(SpecIO, RoundTrip) {
  for (const auto& h : {builtin::sign_hyperfield(), builtin::krasner_hyperfield(), builtin::prime_field(5),
                        construct::factor_hyperfield(13, construct::squares_subgroup(13))}) {
    const json j = io::to_json(h);
    EXPECT_EQ(io::table_from_json(j), h) << h.name();
    EXPECT_EQ(io::to_json(io::table_from_json(j)), j);
    json with_kind = j;
    with_kind["kind"] = "table";
    EXPECT_EQ(std::get<FiniteHyperstructure>(io::load_structure(with_kind)), h);
  }
}
