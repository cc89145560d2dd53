#include <chrono>
#include <random>

#include "mstu/error_metrics.hpp"
#include "mstu/errors.hpp"
#include "mstu/limit_trees.hpp"
#include "mstu/strategies.hpp"

namespace mstu {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Baseline: return "baseline";
    case Mode::Tradeoff: return "tradeoff";
    case Mode::ErrorSensitive: return "error-sensitive";
  }
  return "unknown";
}

Mode parse_mode(const std::string& text) {
  if (text == "baseline") return Mode::Baseline;
  if (text == "tradeoff") return Mode::Tradeoff;
  if (text == "error-sensitive" || text == "error_sensitive") return Mode::ErrorSensitive;
  throw InvalidParams("unknown strategy '" + text + "'");
}

bool BoundChecks::all() const {
  return consistency_ok.value_or(true) && robustness_ok.value_or(true) && error_bound_ok.value_or(true);
}

namespace {

BoundChecks check_bounds(Mode mode, const Rational& gamma, std::size_t queries, std::size_t opt, std::size_t k_h) {
  BoundChecks b;
  Rational q(static_cast<std::int64_t>(queries));
  Rational o(static_cast<std::int64_t>(opt));
  Rational k(static_cast<std::int64_t>(k_h));
  Rational consistent = (Rational(1) + Rational(1) / gamma) * o;
  switch (mode) {
    case Mode::Baseline:
      b.robustness_ok = q <= Rational(2) * o;
      break;
    case Mode::Tradeoff:
      if (k_h == 0) b.consistency_ok = q <= consistent;
      b.robustness_ok = q <= gamma * o;
      break;
    case Mode::ErrorSensitive:
      if (k_h == 0) b.consistency_ok = q <= consistent;
      b.robustness_ok = q <= std::max(Rational(3) * o, gamma * o + Rational(opt > 0 ? 1 : 0));
      b.error_bound_ok = q <= std::min(consistent + Rational(5) * k, (gamma + Rational(1)) * o);
      break;
  }
  return b;
}

}  // namespace

RunReport run_combined(const UncertainGraph& graph, const StrategyConfig& config, std::size_t oracle_cap) {
  auto started = std::chrono::steady_clock::now();
  if (config.gamma < Rational(2)) throw InvalidParams("gamma must be at least 2");
  if (config.mode != Mode::Baseline && config.gamma.denominator() != 1) {
    throw InvalidParams("run_combined needs an integral gamma; use randomized_gamma for " + to_string(config.gamma));
  }

  RunReport report;
  report.mode = config.mode;
  report.gamma = config.gamma;
  report.gamma_used = config.gamma;

  WorkingGraph g(graph, ValueSource::Truth);
  if (config.mode == Mode::Baseline) {
    run_baseline(g);
  } else {
    make_prediction_mandatory_free(g, config.gamma.numerator());
    report.phase1_queries = g.query_count();
    g.transcript().phase_switch("second-phase");
    if (config.mode == Mode::Tradeoff) {
      phase2_tradeoff(g);
    } else {
      phase2_error_sensitive(g);
    }
  }
  if (auto tree = verified_tree(g)) g.transcript().set_final_tree(*tree);

  report.queries = g.query_count();
  report.transcript = g.transcript();
  report.opt = opt_brute_force(graph, ValueSource::Truth, false, oracle_cap).size;
  ErrorReport errors = hop_distance(graph);
  report.k_h = errors.k_h;
  report.k_wrong = errors.k_wrong;
  if (report.opt > 0) {
    report.ratio = Rational(static_cast<std::int64_t>(report.queries), static_cast<std::int64_t>(report.opt));
  }
  report.bounds = check_bounds(config.mode, config.gamma, report.queries, report.opt, report.k_h);
  if (report.opt == 0 && report.queries != 0) report.bounds.robustness_ok = false;
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

Rational rounding_slack(const Rational& gamma) {
  Rational lo = floor(gamma);
  Rational hi = ceil(gamma);
  Rational frac = gamma - lo;
  return frac * (Rational(1) - frac) / (gamma * hi * lo);
}

Rational expected_inverse_gamma(const Rational& gamma) {
  Rational lo = floor(gamma);
  Rational frac = gamma - lo;
  if (frac == Rational(0)) return Rational(1) / gamma;
  return frac / ceil(gamma) + (Rational(1) - frac) / lo;
}

std::int64_t draw_gamma(const Rational& gamma, std::uint64_t seed) {
  Rational lo = floor(gamma);
  Rational frac = gamma - lo;
  if (frac == Rational(0)) return lo.numerator();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, frac.denominator() - 1);
  return pick(rng) < frac.numerator() ? lo.numerator() + 1 : lo.numerator();
}

RunReport randomized_gamma(const UncertainGraph& graph, const Rational& gamma, Mode mode, std::uint64_t seed,
                           std::size_t oracle_cap) {
  if (gamma < Rational(2)) throw InvalidParams("gamma must be at least 2");
  StrategyConfig config;
  config.mode = mode;
  config.seed = seed;
  config.gamma = Rational(draw_gamma(gamma, seed));
  RunReport report = run_combined(graph, config, oracle_cap);
  report.gamma = gamma;
  report.expected_inverse_gamma = expected_inverse_gamma(gamma);
  report.xi = rounding_slack(gamma);
  return report;
}

}  // namespace mstu
