#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mstu/bench.hpp"
#include "mstu/errors.hpp"

namespace mstu {
namespace {

using nlohmann::json;

json read(const std::string& name) {
  std::ifstream in(std::string(MSTU_DATA_DIR) + "/" + name);
  return json::parse(in);
}

TEST(BenchConfig, ExpandsParameterLists) {
  BenchConfig c = parse_bench_config(read("bench_triangles.json"));
  ASSERT_EQ(c.instances.size(), 4u);
  EXPECT_EQ(c.instances[2].id, "triangle-chain{n=3}");
  EXPECT_EQ(c.strategies, std::vector<Mode>{Mode::ErrorSensitive});

  json doc = {{"families", {{{"family", "random"}, {"params", {{"vertices", {4, 5}}, {"error_rate", {0, 0.5}}}}}}},
              {"strategies", {"tradeoff"}},
              {"seeds", {1, 2, 3}}};
  EXPECT_EQ(parse_bench_config(doc).instances.size(), 12u);
}

TEST(BenchConfig, RejectsBadConfigurations) {
  json doc = read("bench_triangles.json");
  doc["strategies"] = json::array();
  EXPECT_THROW(parse_bench_config(doc), ConfigError);
  doc = read("bench_triangles.json");
  doc["strategies"] = {"greedy"};
  EXPECT_THROW(parse_bench_config(doc), ConfigError);
  doc = read("bench_triangles.json");
  doc["gammas"] = {"3/2"};
  EXPECT_THROW(parse_bench_config(doc), ConfigError);
  doc = read("bench_triangles.json");
  doc.erase("families");
  EXPECT_THROW(parse_bench_config(doc), ConfigError);
  EXPECT_THROW(parse_bench_config(json::array()), ConfigError);
}

TEST(Bench, TriangleChainsMeetTheErrorBound) {
  std::vector<BenchRow> rows = run_bench(parse_bench_config(read("bench_triangles.json")));
  ASSERT_EQ(rows.size(), 4u);
  for (const BenchRow& row : rows) {
    EXPECT_EQ(row.status, "ok");
    EXPECT_EQ(row.report.bounds.error_bound_ok, true);
  }
  EXPECT_TRUE(all_bounds_hold(rows));
}

TEST(Bench, OversizedInstancesBecomeWarningRows) {
  json doc = {{"families", {{{"family", "path-parallel"}, {"params", {{"n", {2, 9}}}}}}},
              {"strategies", {"baseline"}}};
  std::vector<BenchRow> rows = run_bench(parse_bench_config(doc));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].status, "ok");
  EXPECT_EQ(rows[1].status, "cap-exceeded");
  EXPECT_TRUE(all_bounds_hold(rows));
}

TEST(Bench, FractionalGammaUsesTheRandomizedWrapper) {
  json doc = {{"families", {{{"family", "tradeoff-cycle"}, {"params", {{"beta", 3}}}}}},
              {"strategies", {"tradeoff"}},
              {"gammas", {"5/2"}}};
  std::vector<BenchRow> rows = run_bench(parse_bench_config(doc));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].report.gamma, Rational(5, 2));
  EXPECT_EQ(rows[0].report.expected_inverse_gamma, Rational(5, 12));
}

TEST(Bench, DeterministicTables) {
  BenchConfig c = parse_bench_config(read("bench_families.json"));
  c.threads = 1;
  auto strip = [](std::string csv) {
    // runtime_ms is the only column that may differ between runs.
    std::stringstream in(csv), out;
    std::string line;
    while (std::getline(in, line)) {
      auto last = line.rfind(',');
      auto before = line.rfind(',', last - 1);
      out << line.substr(0, before) << line.substr(last) << "\n";
    }
    return out.str();
  };
  std::string a = strip(to_csv(run_bench(c)));
  c.threads = 3;
  std::string b = strip(to_csv(run_bench(c)));
  EXPECT_EQ(a, b);
}

TEST(Bench, CsvColumnsAndRatios) {
  std::vector<BenchRow> rows = run_bench(parse_bench_config(read("bench_triangles.json")));
  std::string csv = to_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), csv_header());
  EXPECT_EQ(csv_header(),
            "instance,strategy,gamma,gamma_used,queries,opt,ratio,ratio_decimal,k_h,k_wrong,"
            "consistency_ok,robustness_ok,error_bound_ok,runtime_ms,status");
  json j = to_json(rows);
  ASSERT_EQ(j.size(), 4u);
  for (const json& row : j) {
    Rational ratio = parse_rational(row.at("ratio").get<std::string>());
    EXPECT_EQ(ratio, Rational(row.at("queries").get<std::int64_t>(), row.at("opt").get<std::int64_t>()));
    EXPECT_NEAR(row.at("ratio_decimal").get<double>(), to_double(ratio), 1e-12);
  }
}

TEST(Bench, NamedFamiliesAllHold) {
  std::vector<BenchRow> rows = run_bench(parse_bench_config(read("bench_families.json")));
  EXPECT_GT(rows.size(), 100u);
  for (const BenchRow& row : rows) EXPECT_EQ(row.status, "ok") << row.report.instance << " " << row.message;
}

}  // namespace
}  // namespace mstu
