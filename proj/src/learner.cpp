#include "mstu/learner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mstu/error_metrics.hpp"
#include "mstu/errors.hpp"
#include "mstu/instance_io.hpp"

namespace mstu {

RealizationSampler::RealizationSampler(const UncertainGraph& graph, std::vector<ValueMixture> mixtures,
                                       std::uint64_t seed)
    : mixtures_(std::move(mixtures)), rng_(seed) {
  if (mixtures_.size() != graph.edge_count()) throw InvalidParams("need one mixture per edge");
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const ValueMixture& mix = mixtures_[e];
    if (mix.atoms.empty()) throw InvalidParams("empty mixture for edge " + std::to_string(e));
    Rational total(0);
    for (const auto& [value, weight] : mix.atoms) {
      if (!graph.edge(e).interval.contains(value)) {
        throw InvalidParams("mixture value " + to_string(value) + " outside the interval of edge " + std::to_string(e));
      }
      if (weight <= Rational(0)) throw InvalidParams("mixture weights must be positive");
      total += weight;
    }
    if (total != Rational(1)) throw InvalidParams("mixture weights of edge " + std::to_string(e) + " do not sum to 1");
  }
}

RealizationSampler RealizationSampler::point_mass(const UncertainGraph& graph, std::uint64_t seed) {
  std::vector<ValueMixture> mixtures;
  for (const UncertainEdge& e : graph.edges()) mixtures.push_back({{{e.truth, Rational(1)}}});
  return RealizationSampler(graph, std::move(mixtures), seed);
}

std::vector<Rational> RealizationSampler::sample() {
  std::vector<Rational> out;
  out.reserve(mixtures_.size());
  for (const ValueMixture& mix : mixtures_) {
    // Exact draw: pick a point on the common-denominator grid of the weights.
    std::int64_t den = 1;
    for (const auto& atom : mix.atoms) den = std::lcm(den, atom.second.denominator());
    std::uniform_int_distribution<std::int64_t> pick(0, den - 1);
    std::int64_t ticket = pick(rng_);
    for (const auto& [value, weight] : mix.atoms) {
      std::int64_t share = weight.numerator() * (den / weight.denominator());
      if (ticket < share) {
        out.push_back(value);
        break;
      }
      ticket -= share;
    }
  }
  return out;
}

std::vector<ValueMixture> mixtures_from_json(const UncertainGraph& graph, const nlohmann::json& doc) {
  std::vector<ValueMixture> mixtures;
  for (const UncertainEdge& e : graph.edges()) mixtures.push_back({{{e.truth, Rational(1)}}});
  if (!doc.contains("edges") || !doc.at("edges").is_array()) throw ParseError("distribution needs an \"edges\" array");
  for (const nlohmann::json& item : doc.at("edges")) {
    EdgeId id = item.at("id").get<EdgeId>();
    if (id >= graph.edge_count()) throw UnknownEdge("distribution names unknown edge " + std::to_string(id));
    ValueMixture mix;
    for (const nlohmann::json& atom : item.at("atoms")) {
      mix.atoms.push_back({rational_from_json(atom.at("value")), rational_from_json(atom.at("weight"))});
    }
    mixtures[id] = std::move(mix);
  }
  return mixtures;
}

CandidateGrid discretize(const UncertainGraph& graph) {
  CandidateGrid grid;
  for (const UncertainEdge& e : graph.edges()) {
    std::vector<Rational> points;
    std::vector<Rational> candidates;
    if (e.interval.is_trivial()) {
      candidates.push_back(e.interval.value());
    } else {
      std::set<Rational> inside;
      for (const UncertainEdge& other : graph.edges()) {
        if (other.id == e.id || other.interval.is_trivial()) continue;
        for (const Rational& limit : {other.interval.lower(), other.interval.upper()}) {
          if (e.interval.contains(limit)) inside.insert(limit);
        }
      }
      points.assign(inside.begin(), inside.end());
      Rational left = e.interval.lower();
      for (const Rational& b : points) {
        candidates.push_back((left + b) / Rational(2));
        candidates.push_back(b);
        left = b;
      }
      candidates.push_back((left + e.interval.upper()) / Rational(2));
    }
    grid.breakpoints.push_back(std::move(points));
    grid.candidates.push_back(std::move(candidates));
  }
  return grid;
}

Rational empirical_edge_loss(const UncertainGraph& graph, EdgeId e, const Rational& prediction,
                             const std::vector<std::vector<Rational>>& samples) {
  if (samples.empty()) throw InvalidParams("need at least one sample");
  std::int64_t total = 0;
  for (const std::vector<Rational>& w : samples) {
    total += static_cast<std::int64_t>(edge_hop_loss(graph, e, w.at(e), prediction));
  }
  return Rational(total, static_cast<std::int64_t>(samples.size()));
}

namespace {

template <typename Loss>
std::vector<Rational> per_edge_argmin(const UncertainGraph& graph, Loss loss) {
  CandidateGrid grid = discretize(graph);
  std::vector<Rational> out;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const std::vector<Rational>& candidates = grid.candidates[e];
    Rational best_value = candidates.front();
    Rational best_loss = loss(e, best_value);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      Rational l = loss(e, candidates[i]);
      if (l < best_loss) {
        best_loss = l;
        best_value = candidates[i];
      }
    }
    out.push_back(best_value);
  }
  return out;
}

Rational expected_edge_loss(const UncertainGraph& graph, EdgeId e, const ValueMixture& mix, const Rational& prediction) {
  Rational total(0);
  for (const auto& [value, weight] : mix.atoms) {
    total += weight * Rational(static_cast<std::int64_t>(edge_hop_loss(graph, e, value, prediction)));
  }
  return total;
}

}  // namespace

std::vector<Rational> erm_predictions(const UncertainGraph& graph, const std::vector<std::vector<Rational>>& samples) {
  return per_edge_argmin(graph, [&](EdgeId e, const Rational& p) { return empirical_edge_loss(graph, e, p, samples); });
}

std::vector<Rational> erm_train(const UncertainGraph& graph, RealizationSampler& sampler, std::size_t samples) {
  if (samples == 0) throw InvalidParams("need at least one sample");
  std::vector<std::vector<Rational>> training;
  for (std::size_t i = 0; i < samples; ++i) training.push_back(sampler.sample());
  return erm_predictions(graph, training);
}

Rational expected_hop_distance(const UncertainGraph& graph, const std::vector<ValueMixture>& mixtures,
                               const std::vector<Rational>& predictions) {
  Rational total(0);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    total += expected_edge_loss(graph, e, mixtures.at(e), predictions.at(e));
  }
  return total;
}

std::vector<Rational> grid_optimal_predictions(const UncertainGraph& graph, const std::vector<ValueMixture>& mixtures) {
  return per_edge_argmin(graph, [&](EdgeId e, const Rational& p) { return expected_edge_loss(graph, e, mixtures.at(e), p); });
}

}  // namespace mstu
