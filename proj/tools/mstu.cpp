#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mstu/bench.hpp"
#include "mstu/error_metrics.hpp"
#include "mstu/errors.hpp"
#include "mstu/generators.hpp"
#include "mstu/instance_io.hpp"
#include "mstu/learner.hpp"
#include "mstu/oracle.hpp"
#include "mstu/strategies.hpp"

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mstu::ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw mstu::ConfigError(path + ": " + err.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out);
  if (!file) throw mstu::Error("cannot write " + out);
  file << text;
}

std::string names(const mstu::UncertainGraph& g, const std::vector<mstu::EdgeId>& ids) {
  std::string s;
  for (mstu::EdgeId e : ids) {
    if (!s.empty()) s += ' ';
    s += g.name(e);
  }
  return s;
}

json names_json(const mstu::UncertainGraph& g, const std::vector<mstu::EdgeId>& ids) {
  json out = json::array();
  for (mstu::EdgeId e : ids) out.push_back(g.name(e));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum spanning trees under explorable uncertainty with predictions"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string format = "csv";
  std::size_t cap = mstu::kDefaultOracleCap;
  app.add_option("--seed", seed, "Seed for randomized components");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--oracle-cap", cap, "Largest number of non-trivial edges the brute-force oracle accepts");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  std::string family, params_text = "{}", out;
  gen->add_option("--family", family)->required();
  gen->add_option("--params", params_text, "JSON parameter object");
  gen->add_option("--out", out);

  auto* run = app.add_subcommand("run", "Run a strategy against the true values");
  std::string alg = "tradeoff", gamma_text = "2", instance_path, report_path;
  run->add_option("--alg", alg)->check(CLI::IsMember({"baseline", "tradeoff", "error-sensitive", "error_sensitive"}));
  run->add_option("--gamma", gamma_text, "Rational gamma >= 2, e.g. 3 or 5/2");
  run->add_option("--instance", instance_path)->required()->check(CLI::ExistingFile);
  run->add_option("--report", report_path, "Write the full JSON report with transcript");

  auto* opt = app.add_subcommand("opt", "Minimum feasible query set by enumeration");
  std::string values = "truth";
  bool all_sets = false;
  opt->add_option("--instance", instance_path)->required()->check(CLI::ExistingFile);
  opt->add_option("--values", values)->check(CLI::IsMember({"truth", "pred"}));
  opt->add_flag("--all", all_sets, "List every optimal set");

  auto* error = app.add_subcommand("error", "Hop distance of the predictions");
  error->add_option("--instance", instance_path)->required()->check(CLI::ExistingFile);

  auto* learn = app.add_subcommand("learn", "Learn predictions from sampled realizations");
  std::string dist_path;
  std::size_t samples = 200;
  learn->add_option("--instance", instance_path)->required()->check(CLI::ExistingFile);
  learn->add_option("--dist", dist_path, "Per-edge value mixtures (JSON)");
  learn->add_option("--samples", samples);
  learn->add_option("--out", out);

  auto* bench = app.add_subcommand("bench", "Run a benchmark configuration");
  std::string config_path;
  bench->add_option("config", config_path)->required()->check(CLI::ExistingFile);
  bench->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      json params = json::parse(params_text);
      if (family == "random" && !params.contains("seed")) params["seed"] = seed;
      emit(mstu::save_instance(mstu::generate(family, params)), out);
    } else if (*run) {
      mstu::UncertainGraph g = mstu::load_instance(instance_path);
      mstu::Rational gamma = mstu::parse_rational(gamma_text);
      mstu::Mode mode = mstu::parse_mode(alg);
      mstu::RunReport report = gamma.denominator() == 1 || mode == mstu::Mode::Baseline
                                   ? mstu::run_combined(g, {gamma, mode, seed}, cap)
                                   : mstu::randomized_gamma(g, gamma, mode, seed, cap);
      report.instance = instance_path;
      mstu::BenchRow row{report.bounds.all() ? "ok" : "bound-failed", "", report};
      if (format == "json") {
        std::cout << mstu::to_json({row}).dump(2) << "\n";
      } else {
        std::cout << mstu::to_csv({row});
      }
      if (!report_path.empty()) {
        json full = mstu::report_to_json(report);
        full["transcript"] = report.transcript.to_json();
        emit(full.dump(2) + "\n", report_path);
      }
      return report.bounds.all() ? 0 : 1;
    } else if (*opt) {
      mstu::UncertainGraph g = mstu::load_instance(instance_path);
      auto source = values == "truth" ? mstu::ValueSource::Truth : mstu::ValueSource::Predictions;
      mstu::OptResult result = mstu::opt_brute_force(g, source, all_sets, cap);
      if (format == "json") {
        json j = {{"size", result.size}, {"set", names_json(g, result.one_optimal_set)}};
        if (result.all_optimal_sets) {
          json all = json::array();
          for (const auto& s : *result.all_optimal_sets) all.push_back(names_json(g, s));
          j["all"] = all;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "size,set\n";
        if (result.all_optimal_sets) {
          for (const auto& s : *result.all_optimal_sets) std::cout << result.size << ',' << names(g, s) << "\n";
        } else {
          std::cout << result.size << ',' << names(g, result.one_optimal_set) << "\n";
        }
      }
    } else if (*error) {
      mstu::UncertainGraph g = mstu::load_instance(instance_path);
      mstu::ErrorReport report = mstu::hop_distance(g);
      if (format == "json") {
        std::cout << report.to_json().dump(2) << "\n";
      } else {
        std::cout << "edge,jo,oj\n";
        for (mstu::EdgeId e = 0; e < g.edge_count(); ++e) {
          std::cout << g.name(e) << ',' << report.jo[e] << ',' << report.oj[e] << "\n";
        }
        std::cout << "k_h," << report.k_h << ",\nk_wrong," << report.k_wrong << ",\n";
      }
    } else if (*learn) {
      mstu::UncertainGraph g = mstu::load_instance(instance_path);
      mstu::RealizationSampler sampler =
          dist_path.empty() ? mstu::RealizationSampler::point_mass(g, seed)
                            : mstu::RealizationSampler(g, mstu::mixtures_from_json(g, read_json_file(dist_path)), seed);
      std::vector<mstu::Rational> preds = mstu::erm_train(g, sampler, samples);
      emit(mstu::save_instance(g.with_predictions(preds)), out);
    } else if (*bench) {
      mstu::BenchConfig config = mstu::parse_bench_config(read_json_file(config_path));
      if (app.get_option("--oracle-cap")->count() > 0) config.oracle_cap = cap;
      std::vector<mstu::BenchRow> rows = mstu::run_bench(config);
      for (const mstu::BenchRow& row : rows) {
        if (row.status == "cap-exceeded") std::cerr << "warning: skipped " << row.report.instance << ": " << row.message << "\n";
        if (row.status == "error") std::cerr << "error: " << row.report.instance << ": " << row.message << "\n";
      }
      emit(format == "json" ? mstu::to_json(rows).dump(2) + "\n" : mstu::to_csv(rows), out);
      return mstu::all_bounds_hold(rows) ? 0 : 1;
    }
  } catch (const json::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
