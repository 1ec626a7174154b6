#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "nijcheck/acs_catalog.hpp"
#include "nijcheck/report.hpp"
#include "schema_check.hpp"

namespace nijcheck {
namespace {

nlohmann::json schema() {
  return testing::load_json_file(std::string(NIJCHECK_SOURCE_DIR) + "/schemas/report.schema.json");
}

ChainReport s2_report(std::size_t points, bool sweep = false) {
  SamplePlan plan;
  plan.dim = 2;
  plan.count = points;
  plan.seed = 3;
  plan.continuity_sweep = sweep;
  return chain_report(s2_standard(), plan);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1e-6), "1e-06");
  EXPECT_EQ(format_double(-8.0 / 7.0), "-1.1428571428571428");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int k = 0; k < 1000; ++k) {
    const double v = u(rng) * std::pow(10.0, double(k % 40 - 20));
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Json, LayoutAndValues) {
  const ChainReport r = s2_report(20);
  const nlohmann::json doc = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(doc["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(doc["structure"], "s2");
  EXPECT_EQ(doc["dim"], 2);
  EXPECT_EQ(doc["points"], 20);
  EXPECT_EQ(doc["tolerances"]["hold"], 1e-6);
  ASSERT_EQ(doc["claims"].size(), 10u);
  EXPECT_EQ(doc["claims"][8]["claim_id"], "C8");
  EXPECT_EQ(doc["claims"][8]["verdict"], "holds");
  EXPECT_EQ(doc["claims"][0]["residual_unit"], "g-norm");
  EXPECT_EQ(doc["claims"][7]["residual_unit"], "abs");
  EXPECT_TRUE(doc["claims"][7].contains("values"));
  EXPECT_FALSE(doc["claims"][0].contains("sweep"));
  EXPECT_EQ(doc["provenance"]["sampling"], "ambient-gaussian");
  // numbers survive the round trip exactly
  EXPECT_EQ(doc["claims"][0]["max_residual"].get<double>(), r.claims[0].max_residual);
}

TEST(Json, FirstBreakNullWhenNothingFails) {
  const nlohmann::json doc = nlohmann::json::parse(to_json(s2_report(0)));
  EXPECT_TRUE(doc["first_break"].is_null());
}

TEST(Json, SweepEntriesAllowNull) {
  ChainReport r = s2_report(5, true);
  r.claims[0].sweep.push_back({1.0, std::nullopt});
  const nlohmann::json doc = nlohmann::json::parse(to_json(r));
  ASSERT_TRUE(doc["claims"][0].contains("sweep"));
  EXPECT_TRUE(doc["claims"][0]["sweep"].back()["residual"].is_null());
  EXPECT_TRUE(testing::schema_violations(schema(), doc).empty());
}

TEST(Json, ValidatesAgainstSchema) {
  for (std::size_t points : {0u, 7u}) {
    for (bool sweep : {false, true}) {
      const nlohmann::json doc = nlohmann::json::parse(to_json(s2_report(points, sweep)));
      const auto errors = testing::schema_violations(schema(), doc);
      EXPECT_TRUE(errors.empty()) << (errors.empty() ? "" : errors.front());
    }
  }
}

TEST(Json, SchemaCheckerCatchesViolations) {
  nlohmann::json doc = nlohmann::json::parse(to_json(s2_report(3)));
  doc["claims"][0]["verdict"] = "maybe";
  doc.erase("seed");
  doc["extra"] = 1;
  doc["claims"][1]["points_evaluated"] = -1;
  EXPECT_EQ(testing::schema_violations(schema(), doc).size(), 4u);
}

TEST(Json, ByteIdenticalAcrossRuns) {
  EXPECT_EQ(to_json(s2_report(30, true)), to_json(s2_report(30, true)));
}

TEST(Csv, HeaderAndRows) {
  const std::string csv = to_csv(s2_report(4));
  const std::string header =
      "claim_id,structure,points_evaluated,points_excluded,max_residual,mean_residual,verdict\n";
  ASSERT_EQ(csv.substr(0, header.size()), header);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
  EXPECT_NE(csv.find("\nC8,s2,4,0,0,0,holds\n"), std::string::npos);
}

}  // namespace
}  // namespace nijcheck
