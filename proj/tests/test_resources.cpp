#include <gtest/gtest.h>

#include "json.hpp"
#include "kclique/error.hpp"
#include "kclique/grover.hpp"
#include "kclique/resources.hpp"

using namespace kclique;

TEST(QuantumVolume, RequiredQv) {
  EXPECT_EQ(required_qv(79, 9), 512u);
  EXPECT_EQ(required_qv(1, 1), 2u);
  EXPECT_EQ(required_qv(3, 10), 8u);
  EXPECT_THROW(required_qv(0, 4), Error);
  EXPECT_THROW(required_qv(4, 0), Error);
  for (std::size_t d = 1; d < 20; ++d) {
    for (std::size_t n = 1; n < 20; ++n) {
      EXPECT_LE(required_qv(d, n), required_qv(d + 1, n));
      EXPECT_LE(required_qv(d, n), required_qv(d, n + 1));
    }
  }
}

TEST(QuantumVolume, YearEstimate) {
  EXPECT_EQ(year_estimate(512).year, 2024);
  EXPECT_FALSE(year_estimate(512).clamped);
  EXPECT_EQ(year_estimate(32).year, 2020);
  EXPECT_EQ(year_estimate(1024).year, 2025);
  EXPECT_EQ(year_estimate(16).year, 2020);
  EXPECT_TRUE(year_estimate(16).clamped);
  EXPECT_THROW(year_estimate(48), Error);
  EXPECT_THROW(year_estimate(0), Error);
}

TEST(Report, EmptyCircuitIsZero) {
  const auto r = report(Circuit(3), {});
  EXPECT_EQ(r.size, 0u);
  EXPECT_EQ(r.depth, 0u);
  EXPECT_EQ(r.decomposed_size, 0u);
  EXPECT_EQ(r.counts.total(), 0u);
  EXPECT_EQ(r.required_qv, 1u);
}

TEST(Report, WPrepAloneHasSeventeenGates) {
  const auto r = report(w_complement(4), {});
  EXPECT_EQ(r.decomposed_size, 17u);
  EXPECT_EQ(r.decomposed_counts.not_gates, 5u);
  EXPECT_EQ(r.decomposed_counts.cnot, 6u);
  EXPECT_EQ(r.decomposed_counts.other, 6u);
  EXPECT_EQ(r.decomposed_counts.ccnot, 0u);
}

TEST(Report, FullCheckingG4WithinTwofoldOfTable) {
  const auto gc = assemble(fixture_g4(), 3, PrepKind::Full, OracleStyle::Checking);
  const auto r = report(gc.circuit, {"g4", 3, PrepKind::Full, OracleStyle::Checking, 3});
  for (double size : {double(r.size), double(r.decomposed_size)}) {
    EXPECT_GE(size, 214.0 / 2);
    EXPECT_LE(size, 214.0 * 2);
  }
  for (double depth : {double(r.depth), double(r.decomposed_depth)}) {
    EXPECT_GE(depth, 165.0 / 2);
    EXPECT_LE(depth, 165.0 * 2);
  }
  EXPECT_LE(r.counts.total(), r.size);
  EXPECT_EQ(r.decomposed_counts.total(), r.decomposed_size);
}

TEST(Report, SixConfigsOnG4RankWCheckingFirst) {
  const auto reports = report_all_configs(fixture_g4(), 3, "g4");
  ASSERT_EQ(reports.size(), 6u);
  const auto order = rank_by_decomposed_size(reports);
  const auto& best = reports[order.front()].config;
  EXPECT_EQ(best.prep, PrepKind::WComplement);
  EXPECT_EQ(best.oracle, OracleStyle::Checking);
  EXPECT_EQ(best.label(), "w-checking");
  for (std::size_t i = 1; i < order.size(); ++i) {
    EXPECT_LE(reports[order[i - 1]].decomposed_size, reports[order[i]].decomposed_size);
  }
}

TEST(Report, SkipsInapplicablePreps) {
  // k = 3 on six nodes: the W-complement prep needs k = n - 1.
  const auto reports = report_all_configs(fixture_g6(), 3, "g6");
  EXPECT_EQ(reports.size(), 4u);
  for (const auto& r : reports) {
    EXPECT_NE(r.config.prep, PrepKind::WComplement);
  }
}

TEST(Report, Emitters) {
  const auto reports = report_all_configs(fixture_g4(), 3, "g4");
  const auto j = nlohmann::json::parse(reports_to_json(reports));
  EXPECT_EQ(j.at("schema"), 1);
  ASSERT_EQ(j.at("reports").size(), 6u);
  EXPECT_EQ(j["reports"][0]["config"]["prep"], "full");
  EXPECT_TRUE(j["reports"][0]["decomposed"]["counts"].contains("CCNOT"));

  const auto csv = reports_to_csv(reports, true);
  EXPECT_EQ(csv.rfind("config,graph,k,iterations,size,depth,qubits,NOT,CNOT,CCNOT,other,"
                      "required_qv,year\r\n",
                      0),
            0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);

  const auto text = reports_to_text(reports);
  for (const auto* label : {"full-checking", "w-incremental", "dicke-checking"}) {
    EXPECT_NE(text.find(label), std::string::npos);
  }
}

TEST(Csv, Quoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("line\nbreak"), "\"line\nbreak\"");
}

TEST(LinearFit, ExactAndNoisy) {
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> y = {3, 5, 7, 9};
  const auto f = linear_fit(x, y);
  EXPECT_NEAR(f.slope, 2.0, 1e-12);
  EXPECT_NEAR(f.intercept, 1.0, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);

  const std::vector<double> yn = {1, 3, 2, 4};
  // Hand-computed: sxy = 4, sxx = 5, syy = 5 -> r^2 = 16/25.
  EXPECT_NEAR(linear_fit(x, yn).r_squared, 0.64, 1e-12);
  const std::vector<double> one = {1};
  EXPECT_THROW(linear_fit(one, one), Error);
  const std::vector<double> same = {2, 2};
  EXPECT_THROW(linear_fit(same, same), Error);
}
