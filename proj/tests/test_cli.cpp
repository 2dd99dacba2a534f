#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kclique/cli.hpp"
#include "kclique/error.hpp"

using namespace kclique;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "kclique");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("kclique_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::vector<std::string> csv_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::stringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST(Cli, SolveWPrepDecodesTriangle) {
  const auto r = run({"solve", "--graph", "g4", "--k", "3", "--prep", "w", "--oracle", "checking"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("top outcome: 0111 -> {0,1,2} (clique)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("success probability: 1 "), std::string::npos);
  EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
}

TEST(Cli, SolveJson) {
  const auto r = run({"solve", "--prep", "dicke", "--oracle", "incremental", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["iterations"], 1);
  EXPECT_EQ(j["ideal"]["top_outcome"], "0111");
  EXPECT_EQ(j["ideal"]["top_nodes"], nlohmann::json::parse("[0,1,2]"));
  EXPECT_NEAR(j["ideal"]["success_probability"].get<double>(), 1.0, 1e-9);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, SolveStarReportsNoClique) {
  const auto r = run({"solve", "--graph", "star4", "--k", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("no k-clique exists"), std::string::npos);
}

TEST(Cli, SolveWithNoiseIsBelowIdeal) {
  const auto r = run({"solve", "--prep", "full", "--noise", "ibmq_singapore", "--trajectories",
                      "100", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["noisy"]["profile"], "singapore");
  EXPECT_LT(j["noisy"]["success_probability"].get<double>(),
            j["ideal"]["success_probability"].get<double>());
}

TEST(Cli, ResourcesAllConfigs) {
  const auto r = run({"resources", "--all-configs"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(csv_lines(r.out).size(), 8u);
  EXPECT_NE(r.out.find("smallest decomposed size: w-checking"), std::string::npos);
}

TEST(Cli, ResourcesDecomposedCsvHasOnlyLoweredCategories) {
  const auto r = run({"resources", "--all-configs", "--decompose", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& rep : j["reports"]) {
    const auto& c = rep["decomposed"]["counts"];
    EXPECT_EQ(c["NOT"].get<int>() + c["CNOT"].get<int>() + c["CCNOT"].get<int>() +
                  c["other"].get<int>(),
              rep["decomposed"]["size"].get<int>());
  }
}

TEST(Cli, ResourcesOnEdgelessGraphFails) {
  const auto path = temp_file("empty.txt", "3 0\n");
  const auto r = run({"resources", "--graph", path, "--k", "2"});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("oracle requires at least one edge"), std::string::npos) << r.err;
}

TEST(Cli, SweepDefaultsToEightProfiles) {
  const auto r = run({"sweep", "--prep", "w", "--trajectories", "64"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = csv_lines(r.out);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[0], "profile,t1_us,t2_us,config,iterations,ideal_prob,success_prob,stderr");
  EXPECT_EQ(lines[3].rfind("singapore,83,89,w-checking", 0), 0u);
}

TEST(Cli, SinglePointSweepEqualsSolve) {
  const auto sweep = run({"sweep", "--prep", "w", "--profile", "paris", "--trajectories", "128",
                          "--seed", "5", "--format", "json"});
  const auto solve = run({"solve", "--prep", "w", "--noise", "paris", "--trajectories", "128",
                          "--seed", "5", "--format", "json"});
  ASSERT_EQ(sweep.code, 0) << sweep.err;
  ASSERT_EQ(solve.code, 0) << solve.err;
  const auto a = nlohmann::json::parse(sweep.out);
  const auto b = nlohmann::json::parse(solve.out);
  EXPECT_EQ(a["rows"][0]["success_prob"], b["noisy"]["success_probability"]);
  EXPECT_EQ(a["rows"][0]["stderr"], b["noisy"]["stderr"]);
}

TEST(Cli, SweepLongerT1IsNotWorse) {
  const auto r = run({"sweep", "--prep", "w", "--grid", "60:60,120:60,120:120,240:120",
                      "--trajectories", "1000", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = nlohmann::json::parse(r.out)["rows"];
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < 4; i += 2) {
    const double lo = rows[i]["success_prob"].get<double>();
    const double hi = rows[i + 1]["success_prob"].get<double>();
    const double se = std::hypot(rows[i]["stderr"].get<double>(), rows[i + 1]["stderr"].get<double>());
    EXPECT_GE(hi, lo - 3 * se);
  }
}

TEST(Cli, VerifyListsCliques) {
  const auto r = run({"verify", "--graph", "g6", "--k", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1 clique(s) of size 4"), std::string::npos);
  EXPECT_NE(r.out.find("{1,2,3,4}  011110"), std::string::npos);
}

TEST(Cli, StateDumpsDickeAmplitudes) {
  const auto r = run({"state", "--prep", "dicke", "--k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = csv_lines(r.out);
  ASSERT_EQ(lines.size(), 17u);
  EXPECT_EQ(lines[0], "index,bitstring,re,im");
  EXPECT_EQ(lines[8].rfind("7,0111,0.5", 0), 0u) << lines[8];
}

TEST(Cli, ErrorsGiveNonzeroExit) {
  EXPECT_NE(run({"solve", "--prep", "bogus"}).code, 0);
  EXPECT_NE(run({"solve", "--iters", "x"}).code, 0);
  const auto w = run({"solve", "--graph", "g6", "--k", "3", "--prep", "w"});
  EXPECT_EQ(w.code, 1);
  EXPECT_NE(w.err.find("error:"), std::string::npos);
  EXPECT_NE(run({"solve", "--graph", "/no/such/file"}).code, 0);
  EXPECT_NE(run({"sweep", "--grid", "1:"}).code, 0);
  EXPECT_NE(run({}).code, 0);
}

TEST(Cli, DeterministicUnderSeed) {
  const std::vector<std::string> args = {"solve", "--prep", "full", "--noise", "cambridge",
                                         "--trajectories", "64", "--seed", "11"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Profiles, DeviceTable) {
  const auto& d = device_profiles();
  ASSERT_EQ(d.size(), 6u);
  const std::vector<std::tuple<std::string, double, double>> want = {
      {"melbourne", 55, 59}, {"poughkeepsie", 64, 65}, {"singapore", 83, 89},
      {"paris", 76, 67},     {"cambridge", 81, 39},    {"rochester", 55, 59}};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(d[i].name, std::get<0>(want[i]));
    EXPECT_EQ(d[i].t1_us, std::get<1>(want[i]));
    EXPECT_EQ(d[i].t2_us, std::get<2>(want[i]));
  }
}

TEST(Profiles, Loading) {
  EXPECT_EQ(load_noise_profile("ibmq_paris").t1_us, 76);
  EXPECT_EQ(load_noise_profile("thermal_200").t2_us, 200);
  const auto p = load_noise_profile("thermal_100_150");
  EXPECT_EQ(p.t1_us, 100);
  EXPECT_EQ(p.t2_us, 150);
  const auto path = temp_file("profile.json", R"({"name":"x","t1_us":10,"t2_us":5})");
  EXPECT_EQ(load_noise_profile(path).name, "x");
  EXPECT_THROW(load_noise_profile("nowhere"), Error);
}

TEST(Parsing, GridAndIterations) {
  const auto g = parse_grid("200:200,83.5:89");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[1].first, 83.5);
  EXPECT_THROW(parse_grid(""), Error);
  EXPECT_THROW(parse_grid("200"), Error);
  EXPECT_FALSE(parse_iterations("auto").has_value());
  EXPECT_EQ(parse_iterations("4"), 4u);
  EXPECT_THROW(parse_iterations("-1"), Error);
}

TEST(Graphs, BuiltinsAndFiles) {
  EXPECT_EQ(load_graph("g4").num_edges(), 4u);
  EXPECT_EQ(load_graph("g6").num_edges(), 10u);
  EXPECT_EQ(load_graph(std::string(KCLIQUE_REPO_DATA) + "/g6.txt").edges(),
            load_graph("g6").edges());
}
