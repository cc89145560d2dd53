#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "mstu/graph.hpp"

namespace mstu {

// Finite mixture of rational point masses. Weights are positive and sum to 1.
struct ValueMixture {
  std::vector<std::pair<Rational, Rational>> atoms;  // (value, weight)
};

class RealizationSampler {
 public:
  // One mixture per edge; every value must lie inside the edge's interval.
  RealizationSampler(const UncertainGraph& graph, std::vector<ValueMixture> mixtures, std::uint64_t seed);

  // Point mass at each edge's true value.
  static RealizationSampler point_mass(const UncertainGraph& graph, std::uint64_t seed);

  std::vector<Rational> sample();
  const std::vector<ValueMixture>& mixtures() const { return mixtures_; }

 private:
  std::vector<ValueMixture> mixtures_;
  std::mt19937_64 rng_;
};

// Reads {"edges":[{"id":0,"atoms":[{"value":"1/2","weight":"1/3"},...]},...]}.
// Edges that are not listed get a point mass at their true value.
std::vector<ValueMixture> mixtures_from_json(const UncertainGraph& graph, const nlohmann::json& doc);

struct CandidateGrid {
  std::vector<std::vector<Rational>> breakpoints;  // other-edge limits inside I_e, ascending
  std::vector<std::vector<Rational>> candidates;   // breakpoints and gap midpoints, ascending
};

CandidateGrid discretize(const UncertainGraph& graph);

// Mean hop loss of predicting `prediction` for edge e over the samples.
Rational empirical_edge_loss(const UncertainGraph& graph, EdgeId e, const Rational& prediction,
                             const std::vector<std::vector<Rational>>& samples);

// Per-edge minimizer of the empirical hop loss over the candidate grid,
// smallest value on ties.
std::vector<Rational> erm_predictions(const UncertainGraph& graph, const std::vector<std::vector<Rational>>& samples);
std::vector<Rational> erm_train(const UncertainGraph& graph, RealizationSampler& sampler, std::size_t samples);

// Exact expected hop distance of `predictions` under independent per-edge mixtures.
Rational expected_hop_distance(const UncertainGraph& graph, const std::vector<ValueMixture>& mixtures,
                               const std::vector<Rational>& predictions);

// Per-edge grid candidate minimizing the exact expected loss.
std::vector<Rational> grid_optimal_predictions(const UncertainGraph& graph, const std::vector<ValueMixture>& mixtures);

}  // namespace mstu
