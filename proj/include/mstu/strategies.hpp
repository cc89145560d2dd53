#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mstu/oracle.hpp"
#include "mstu/vertex_cover.hpp"
#include "mstu/working_graph.hpp"

namespace mstu {

enum class Mode { Baseline, Tradeoff, ErrorSensitive };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct StrategyConfig {
  Rational gamma = Rational(2);
  Mode mode = Mode::Tradeoff;
  std::uint64_t seed = 0;
};

// Prediction-oblivious strategy that queries witness pairs. Returns the
// number of queries it made.
std::size_t run_baseline(WorkingGraph& g);

// One pass of the cycle scan that found a cycle that is not prediction
// mandatory free.
struct CaseRecord {
  char kind = 'b';                 // 'b', 'c' or 'd'
  bool two_step = false;           // the rule that queries one edge first
  std::vector<EdgeId> queried;     // edges queried by the case, in order
  std::optional<EdgeId> spared;    // unqueried partner expected to be removable
  EdgeId f = 0;                    // the non-tree edge f_i
  EdgeId l = 0;                    // l_i (case b/c) or l_i' (case d)
  std::optional<EdgeId> third;     // l_i' (case c) or f_j (case d) of the triple rule
};

struct PreprocessLedger {
  std::vector<EdgeId> queries;              // everything queried, in order
  std::vector<EdgeId> uniqueness_queries;   // queried to make T_L = T_U unique
  std::vector<EdgeId> prediction_mandatory; // queried by the first loop
  std::vector<CaseRecord> cases;
  std::vector<EdgeId> spared;               // the D set: partners removed unqueried
  std::vector<EdgeId> last_iteration;       // queries of the final iteration
  std::size_t iterations = 0;
};

// Queries until the instance has no prediction mandatory edges. `gamma` >= 2.
PreprocessLedger make_prediction_mandatory_free(WorkingGraph& g, std::int64_t gamma);

struct Phase2Ledger {
  std::vector<EdgeId> list_queries;     // Q1
  std::vector<EdgeId> partner_hits;     // Q2: uniqueness/partner queries inside h*(Q1)
  std::vector<EdgeId> partner_misses;   // Q3: remaining uniqueness/partner queries
  std::vector<EdgeId> repair_queries;   // Q4: queries of the set R
  std::map<EdgeId, EdgeId> hstar;       // list query -> its matching partner at query time
  std::set<EdgeId> deferred;            // W
  std::size_t retained_conflicts = 0;   // W elements found in a retained partial matching
  std::size_t rebuilds = 0;
  std::vector<std::pair<std::size_t, std::size_t>> matching_and_cover_sizes;
  bool fell_back = false;               // handed the rest to the baseline
  std::size_t queries = 0;
};

// Requires unique T_L = T_U and no prediction mandatory edges.
Phase2Ledger phase2_tradeoff(WorkingGraph& g);
Phase2Ledger phase2_error_sensitive(WorkingGraph& g);

struct BoundChecks {
  std::optional<bool> consistency_ok;
  std::optional<bool> robustness_ok;
  std::optional<bool> error_bound_ok;
  bool all() const;
};

struct RunReport {
  std::string instance;
  Mode mode = Mode::Tradeoff;
  Rational gamma = Rational(2);
  Rational gamma_used = Rational(2);
  std::size_t queries = 0;
  std::size_t opt = 0;
  std::optional<Rational> ratio;
  std::size_t k_h = 0;
  std::size_t k_wrong = 0;
  BoundChecks bounds;
  std::optional<Rational> expected_inverse_gamma;
  std::optional<Rational> xi;
  double runtime_ms = 0;
  std::size_t phase1_queries = 0;
  QueryTranscript transcript;
};

// Runs the configured strategy on a fresh copy of `graph` and checks the
// guarantees against the brute-force optimum.
RunReport run_combined(const UncertainGraph& graph, const StrategyConfig& config,
                       std::size_t oracle_cap = kDefaultOracleCap);

// E[1/g'] for g' = ceil(gamma) with probability frac(gamma), else floor(gamma).
Rational expected_inverse_gamma(const Rational& gamma);
// frac(gamma)(1 - frac(gamma)) / (gamma ceil(gamma) floor(gamma)).
Rational rounding_slack(const Rational& gamma);
std::int64_t draw_gamma(const Rational& gamma, std::uint64_t seed);

RunReport randomized_gamma(const UncertainGraph& graph, const Rational& gamma, Mode mode, std::uint64_t seed,
                           std::size_t oracle_cap = kDefaultOracleCap);

}  // namespace mstu
