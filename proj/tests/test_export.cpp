#include <gtest/gtest.h>

#include <sstream>

#include "f2orbit/classify.hpp"
#include "f2orbit/errors.hpp"
#include "f2orbit/export.hpp"
#include "json.hpp"

using namespace f2orbit;

TEST(Json, SchemaOfASecondActionCensus) {
  const OrbitCensus c = enumerate(ActionSpec(5, ActionKind::Second));
  const auto j = nlohmann::json::parse(census_to_json(c));
  EXPECT_EQ(j["spec"], "second n=5");
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["kind"], "second");
  EXPECT_EQ(j["total_states"], 1024);
  ASSERT_EQ(j["orbits"].size(), 6u);
  const auto& zero = j["orbits"][0];
  EXPECT_EQ(zero["representative_hex"], "000");
  EXPECT_EQ(zero["cardinality"], 1);
  EXPECT_EQ(zero["height_bits"], "00");
  EXPECT_FALSE(zero.contains("type_label"));
}

TEST(Json, LabelsAppearWhenPresent) {
  const OrbitCensus c = label_orbits(enumerate(ActionSpec(5, ActionKind::Second)), predict_second(5));
  const auto j = nlohmann::json::parse(census_to_json(c));
  EXPECT_EQ(j["orbits"][0]["type_label"], "trivial");
}

TEST(Json, HugeCountsBecomeDecimalStrings) {
  OrbitCensus c;
  c.descriptor = "synthetic";
  c.kind = "graph";
  c.n = 80;
  c.state_dim = 80;
  c.total_states = pow2(80);
  c.records.push_back({F2Vector(80), pow2(70), std::nullopt, {}});
  const auto j = nlohmann::json::parse(census_to_json(c));
  EXPECT_EQ(j["total_states"], "1208925819614629174706176");
  EXPECT_EQ(j["orbits"][0]["cardinality"], "1180591620717411303424");
  EXPECT_EQ(j["orbits"][0]["representative_hex"], std::string(20, '0'));
  EXPECT_EQ(census_from_json(census_to_json(c)), c);
}

TEST(Json, RoundTripsAndIsStable) {
  const OrbitCensus c = label_orbits(enumerate(ActionSpec(5, ActionKind::First)), predict_first(5));
  const std::string text = census_to_json(c);
  EXPECT_EQ(census_from_json(text), c);
  EXPECT_EQ(census_to_json(census_from_json(text)), text);
  EXPECT_THROW(census_from_json("{\"spec\": 1}"), ParseError);
}

TEST(Csv, OneRowPerOrbit) {
  const std::string csv = census_to_csv(enumerate(ActionSpec(5, ActionKind::Second)));
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 7u);
  EXPECT_EQ(lines[0], "representative_hex,cardinality,height_bits,type_label");
  EXPECT_EQ(lines[1], "000,1,00,");
}

TEST(Table, HasHeaderAndRows) {
  const std::string t = census_to_table(enumerate(ActionSpec(3, ActionKind::First)));
  EXPECT_NE(t.find("representative"), std::string::npos);
  EXPECT_NE(t.find("20 orbits"), std::string::npos);
}

TEST(Report, JsonCarriesEveryCheck) {
  const VerificationReport r = verify(5, ActionKind::Second);
  const auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["mode"], "prediction");
  EXPECT_EQ(j["checks"].size(), r.checks.size());
  EXPECT_EQ(j["orbit_count"], 6);
}
