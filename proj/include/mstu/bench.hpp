#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mstu/strategies.hpp"

namespace mstu {

struct InstanceSpec {
  std::string family;
  nlohmann::json params;
  std::string id;
};

struct BenchConfig {
  std::vector<InstanceSpec> instances;
  std::vector<Mode> strategies;
  std::vector<Rational> gammas;
  std::vector<std::uint64_t> seeds;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::size_t threads = 0;  // 0: hardware concurrency
};

// Families expand array-valued parameters into their cross product; the
// random family is additionally crossed with the seed list unless it fixes
// its own seed.
BenchConfig parse_bench_config(const nlohmann::json& doc);

struct BenchRow {
  std::string status;  // "ok", "bound-failed", "cap-exceeded", "error"
  std::string message;
  RunReport report;
};

std::vector<BenchRow> run_bench(const BenchConfig& config);
bool all_bounds_hold(const std::vector<BenchRow>& rows);

std::string csv_header();
std::string csv_row(const BenchRow& row);
std::string to_csv(const std::vector<BenchRow>& rows);
nlohmann::json report_to_json(const RunReport& report);
nlohmann::json to_json(const std::vector<BenchRow>& rows);

}  // namespace mstu
