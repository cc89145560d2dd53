#include "mstu/bench.hpp"

#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "mstu/errors.hpp"
#include "mstu/generators.hpp"
#include "mstu/instance_io.hpp"

namespace mstu {

using nlohmann::json;

namespace {

void expand(const json& params, json::const_iterator it, json current, std::vector<json>& out) {
  if (it == params.end()) {
    out.push_back(std::move(current));
    return;
  }
  auto next = std::next(it);
  if (it.value().is_array()) {
    if (it.value().empty()) throw ConfigError("parameter '" + it.key() + "' has no values");
    for (const json& v : it.value()) {
      json c = current;
      c[it.key()] = v;
      expand(params, next, std::move(c), out);
    }
  } else {
    current[it.key()] = it.value();
    expand(params, next, std::move(current), out);
  }
}

std::string instance_id(const std::string& family, const json& params) {
  std::string id = family;
  if (params.empty()) return id;
  id += "{";
  bool first = true;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!first) id += ",";
    first = false;
    id += it.key() + "=" + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
  }
  return id + "}";
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string flag(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "true" : "false";
}

json flag_json(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

}  // namespace

BenchConfig parse_bench_config(const json& doc) {
  BenchConfig config;
  try {
    if (!doc.is_object()) throw ConfigError("bench config must be a JSON object");
    if (!doc.contains("strategies") || !doc.at("strategies").is_array() || doc.at("strategies").empty()) {
      throw ConfigError("bench config needs a non-empty \"strategies\" list");
    }
    for (const json& s : doc.at("strategies")) config.strategies.push_back(parse_mode(s.get<std::string>()));

    if (doc.contains("gammas")) {
      for (const json& g : doc.at("gammas")) {
        Rational gamma = rational_from_json(g);
        if (gamma < Rational(2)) throw ConfigError("gamma values must be at least 2");
        config.gammas.push_back(gamma);
      }
    }
    if (config.gammas.empty()) config.gammas.push_back(Rational(2));

    if (doc.contains("seeds")) {
      for (const json& s : doc.at("seeds")) config.seeds.push_back(s.get<std::uint64_t>());
    }
    if (config.seeds.empty()) config.seeds.push_back(0);
    if (doc.contains("oracle_cap")) config.oracle_cap = doc.at("oracle_cap").get<std::size_t>();
    if (doc.contains("threads")) config.threads = doc.at("threads").get<std::size_t>();

    if (!doc.contains("families") || !doc.at("families").is_array() || doc.at("families").empty()) {
      throw ConfigError("bench config needs a non-empty \"families\" list");
    }
    for (const json& fam : doc.at("families")) {
      std::string family = fam.at("family").get<std::string>();
      json params = fam.contains("params") ? fam.at("params") : json::object();
      std::vector<json> combos;
      expand(params, params.begin(), json::object(), combos);
      for (json& p : combos) {
        if (family == "random" && !p.contains("seed")) {
          for (std::uint64_t seed : config.seeds) {
            json q = p;
            q["seed"] = seed;
            config.instances.push_back({family, q, instance_id(family, q)});
          }
        } else {
          config.instances.push_back({family, p, instance_id(family, p)});
        }
      }
    }
  } catch (const json::exception& err) {
    throw ConfigError(std::string("malformed bench config: ") + err.what());
  } catch (const ParseError& err) {
    throw ConfigError(err.what());
  } catch (const InvalidParams& err) {
    throw ConfigError(err.what());
  }
  return config;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  struct Task {
    std::size_t instance;
    Mode mode;
    Rational gamma;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < config.instances.size(); ++i) {
    for (Mode mode : config.strategies) {
      if (mode == Mode::Baseline) {
        tasks.push_back({i, mode, Rational(2)});
        continue;
      }
      for (const Rational& gamma : config.gammas) tasks.push_back({i, mode, gamma});
    }
  }

  std::vector<BenchRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const Task& task = tasks[t];
      const InstanceSpec& spec = config.instances[task.instance];
      BenchRow& row = rows[t];
      row.report.instance = spec.id;
      row.report.mode = task.mode;
      row.report.gamma = task.gamma;
      try {
        UncertainGraph graph = generate(spec.family, spec.params);
        std::uint64_t seed = spec.params.contains("seed") ? spec.params.at("seed").get<std::uint64_t>() : config.seeds.front();
        if (task.gamma.denominator() != 1) {
          row.report = randomized_gamma(graph, task.gamma, task.mode, seed, config.oracle_cap);
        } else {
          StrategyConfig sc{task.gamma, task.mode, seed};
          row.report = run_combined(graph, sc, config.oracle_cap);
        }
        row.report.instance = spec.id;
        row.status = row.report.bounds.all() ? "ok" : "bound-failed";
      } catch (const CapExceeded& err) {
        row.status = "cap-exceeded";
        row.message = err.what();
      } catch (const std::exception& err) {
        row.status = "error";
        row.message = err.what();
      }
    }
  };
  std::size_t threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return rows;
}

bool all_bounds_hold(const std::vector<BenchRow>& rows) {
  for (const BenchRow& row : rows) {
    if (row.status == "bound-failed" || row.status == "error") return false;
  }
  return true;
}

std::string csv_header() {
  return "instance,strategy,gamma,gamma_used,queries,opt,ratio,ratio_decimal,k_h,k_wrong,"
         "consistency_ok,robustness_ok,error_bound_ok,runtime_ms,status";
}

std::string csv_row(const BenchRow& row) {
  const RunReport& r = row.report;
  std::ostringstream out;
  out << '"' << r.instance << '"' << ',' << to_string(r.mode) << ',' << to_string(r.gamma) << ','
      << to_string(r.gamma_used) << ',' << r.queries << ',' << r.opt << ',' << (r.ratio ? to_string(*r.ratio) : "")
      << ',' << (r.ratio ? fixed(to_double(*r.ratio), 4) : "") << ',' << r.k_h << ',' << r.k_wrong << ','
      << flag(r.bounds.consistency_ok) << ',' << flag(r.bounds.robustness_ok) << ',' << flag(r.bounds.error_bound_ok)
      << ',' << fixed(r.runtime_ms, 2) << ',' << row.status;
  return out.str();
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::string out = csv_header() + "\n";
  for (const BenchRow& row : rows) out += csv_row(row) + "\n";
  return out;
}

json report_to_json(const RunReport& r) {
  json j = {{"instance", r.instance},
            {"strategy", to_string(r.mode)},
            {"gamma", to_string(r.gamma)},
            {"gamma_used", to_string(r.gamma_used)},
            {"queries", r.queries},
            {"phase1_queries", r.phase1_queries},
            {"opt", r.opt},
            {"ratio", r.ratio ? json(to_string(*r.ratio)) : json(nullptr)},
            {"ratio_decimal", r.ratio ? json(to_double(*r.ratio)) : json(nullptr)},
            {"k_h", r.k_h},
            {"k_wrong", r.k_wrong},
            {"bounds",
             {{"consistency_ok", flag_json(r.bounds.consistency_ok)},
              {"robustness_ok", flag_json(r.bounds.robustness_ok)},
              {"error_bound_ok", flag_json(r.bounds.error_bound_ok)}}},
            {"runtime_ms", r.runtime_ms}};
  if (r.expected_inverse_gamma) j["expected_inverse_gamma"] = to_string(*r.expected_inverse_gamma);
  if (r.xi) j["xi"] = to_string(*r.xi);
  return j;
}

json to_json(const std::vector<BenchRow>& rows) {
  json out = json::array();
  for (const BenchRow& row : rows) {
    json j = report_to_json(row.report);
    j["status"] = row.status;
    if (!row.message.empty()) j["message"] = row.message;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace mstu
