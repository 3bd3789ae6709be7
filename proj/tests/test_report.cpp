#include "repulsion/report.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace repulsion;
using report::json;

TEST(PolyJson, ConstantTermFirst) {
  const json j = report::poly_json(Poly{make_rational(1, 2), 0, 3});
  EXPECT_EQ(j, json::parse(R"(["1/2", "0/1", "3/1"])"));
  EXPECT_EQ(report::poly_json(Poly{}), json::array());
}

TEST(PolyJson, RoundTrip) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 999);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> c(1 + rng() % 8);
    for (auto& v : c) v = make_rational(num(rng), den(rng));
    const Poly p(c);
    EXPECT_EQ(report::poly_from_json(json::parse(report::poly_json(p).dump())), p);
  }
}

TEST(PolyJson, Parsing) {
  EXPECT_EQ(report::poly_from_json(json::parse(R"(["1", 3, "-3/6"])")), (Poly{1, 3, make_rational(-1, 2)}));
  EXPECT_THROW(report::poly_from_json(json::parse(R"({"a":1})")), std::invalid_argument);
  EXPECT_THROW(report::poly_from_json(json::parse(R"([1.5])")), std::invalid_argument);
  EXPECT_THROW(report::poly_from_json(json::parse(R"(["1/x"])")), std::invalid_argument);
}

TEST(QuasiJson, Schema) {
  const json j = report::quasi_json(extract(3));
  EXPECT_EQ(j["B"], 3);
  EXPECT_EQ(j["L"], 6);
  EXPECT_EQ(j["alpha"], "3/1");
  ASSERT_EQ(j["components"].size(), 6U);
  EXPECT_EQ(j["components"][0], json::parse(R"(["1/1", "3/1", "3/1"])"));
}

TEST(PellJson, DecimalStrings) {
  const json j = report::pell_json(pell::family(0, 2));
  ASSERT_EQ(j.size(), 2U);
  EXPECT_EQ(j[1], json::parse(R"({"t":"7","n":"42","m":"13","x":"45"})"));
}

TEST(HitRendering, CsvAndJson) {
  const auto table = PartitionTable::build(2, 20);
  const auto hits = scan(table, 3, 20, 0, {.min_base = 2});
  // p_2(14) = p_2(15) = 8
  ASSERT_EQ(hits.size(), 2U);
  EXPECT_EQ(report::hits_csv(hits), "n,p,m,t,delta\n14,8,2,0,0\n15,8,2,0,0\n");
  const json j = report::hits_json(hits);
  EXPECT_EQ(j[0]["n"], "14");
  EXPECT_EQ(j[0]["p"], "8");
  EXPECT_EQ(report::hits_csv({}), std::string(report::kCsvHeader) + "\n");
  const std::string plain = report::hits_plain(hits);
  EXPECT_NE(plain.find("delta"), std::string::npos);
  EXPECT_NE(plain.find("14"), std::string::npos);
}

TEST(ClassifyJson, Table) {
  const json j = report::classify_json(classify_progression(3, 2, 0));
  EXPECT_EQ(j["theorem_hypotheses"], false);
  ASSERT_EQ(j["table"].size(), 6U);
  EXPECT_EQ(j["table"][3]["class"], "PowerShift");
  EXPECT_EQ(j["table"][3]["details"]["a"], "3/1");
  EXPECT_EQ(j["table"][3]["details"]["R"], json::parse(R"(["1/1","1/1"])"));
  EXPECT_EQ(j["table"][0]["class"], "PellConic");
  EXPECT_EQ(j["counts"]["PellConic"], 5);
  EXPECT_EQ(j["table"][0]["t"], "0");
}

TEST(ClassJson, SingleRootDetails) {
  const json j = report::shift_class_json(SingleRoot{3, true, false, make_rational(1, 2)});
  EXPECT_EQ(j["class"], "SingleRoot");
  EXPECT_EQ(j["details"]["root_denominator"], "2");
  EXPECT_EQ(report::shift_class_json(GenusAtLeastOne{4})["details"]["r_t"], 4);
}

TEST(PointsJson, Pairs) {
  const std::vector<CurvePoint> pts{{BigInt(-1), BigInt(2)}};
  EXPECT_EQ(report::points_json(pts), json::parse(R"([{"X":"-1","Y":"2"}])"));
}
