#include <gtest/gtest.h>

#include "mstu/error_metrics.hpp"
#include "mstu/errors.hpp"
#include "mstu/learner.hpp"
#include "support.hpp"

namespace mstu {
namespace {

using testing::fixture;
using testing::q;

std::vector<ValueMixture> triangle_mixtures() {
  return {
      {{{q(1, 2), q(2, 3)}, {q(3, 2), q(1, 3)}}},
      {{{q(3, 2), q(1, 2)}, {q(5, 2), q(1, 2)}}},
      {{{q(-5, 2), q(1, 2)}, {q(-9, 4), q(1, 2)}}},
  };
}

std::vector<std::vector<Rational>> draw(RealizationSampler& s, std::size_t m) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(s.sample());
  return out;
}

TEST(Discretize, EmptyGapGivesTheMidpoint) {
  std::vector<UncertainEdge> edges = {
      {0, 0, 1, Interval::open(q(0), q(1)), q(1, 2), q(1, 2), ""},
      {1, 0, 1, Interval::open(q(5), q(6)), q(11, 2), q(11, 2), ""},
  };
  CandidateGrid grid = discretize(UncertainGraph(2, edges));
  EXPECT_EQ(grid.candidates[0], (std::vector<Rational>{q(1, 2)}));
  EXPECT_TRUE(grid.breakpoints[0].empty());
}

TEST(Discretize, FigureOneEdgeTwo) {
  UncertainGraph g = fixture("fig1.json");
  CandidateGrid grid = discretize(g);
  EdgeId e2 = *g.find("e2");
  EXPECT_EQ(grid.breakpoints[e2], (std::vector<Rational>{q(5, 2), q(31, 10), q(4)}));
  EXPECT_EQ(grid.candidates[e2].size(), 7u);
  EXPECT_TRUE(std::is_sorted(grid.candidates[e2].begin(), grid.candidates[e2].end()));
}

TEST(Discretize, GridIsAsGoodAsADenseSweep) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    UncertainGraph g = gen_random(testing::small_params(seed, 0.5));
    // Realizations uniform on a 1/8 grid inside each interval.
    std::vector<ValueMixture> mixtures;
    for (const UncertainEdge& e : g.edges()) {
      ValueMixture mix;
      if (e.interval.is_trivial()) {
        mix.atoms.push_back({e.interval.value(), q(1)});
      } else {
        Rational width = e.interval.upper() - e.interval.lower();
        std::int64_t steps = (width * 8).numerator() / (width * 8).denominator();
        for (std::int64_t k = 1; k < steps; ++k) {
          mix.atoms.push_back({e.interval.lower() + q(k, 8), q(1, steps - 1)});
        }
      }
      mixtures.push_back(mix);
    }
    RealizationSampler sampler(g, mixtures, seed);
    auto samples = draw(sampler, 200);
    CandidateGrid grid = discretize(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).interval.is_trivial()) continue;
      Rational grid_best = empirical_edge_loss(g, e, grid.candidates[e].front(), samples);
      for (const Rational& c : grid.candidates[e]) grid_best = std::min(grid_best, empirical_edge_loss(g, e, c, samples));
      Rational sweep_best = grid_best;
      const Interval& iv = g.edge(e).interval;
      for (std::int64_t k = 1; k < 64; ++k) {
        Rational v = iv.lower() + (iv.upper() - iv.lower()) * q(k, 64);
        sweep_best = std::min(sweep_best, empirical_edge_loss(g, e, v, samples));
      }
      EXPECT_EQ(grid_best, sweep_best) << "seed " << seed << " edge " << e;
    }
  }
}

TEST(Sampler, ValidatesMixtures) {
  UncertainGraph tri = gen_triangle_chain(1);
  auto mix = triangle_mixtures();
  mix[0].atoms[0].first = q(2);
  EXPECT_THROW(RealizationSampler(tri, mix, 0), InvalidParams);
  mix = triangle_mixtures();
  mix[1].atoms[0].second = q(1, 3);
  EXPECT_THROW(RealizationSampler(tri, mix, 0), InvalidParams);
  mix = triangle_mixtures();
  mix.pop_back();
  EXPECT_THROW(RealizationSampler(tri, mix, 0), InvalidParams);
}

TEST(Sampler, FrequenciesFollowTheWeights) {
  UncertainGraph tri = gen_triangle_chain(1);
  RealizationSampler s(tri, triangle_mixtures(), 5);
  std::size_t low = 0;
  const std::size_t n = 6000;
  for (std::size_t i = 0; i < n; ++i) low += s.sample()[0] == q(1, 2);
  EXPECT_NEAR(static_cast<double>(low) / n, 2.0 / 3.0, 0.03);
}

TEST(Sampler, ReadsJsonDistributions) {
  UncertainGraph tri = gen_triangle_chain(1);
  nlohmann::json doc = {{"edges", {{{"id", 1}, {"atoms", {{{"value", "3/2"}, {"weight", "1/4"}}, {{"value", "5/2"}, {"weight", "3/4"}}}}}}}};
  auto mix = mixtures_from_json(tri, doc);
  EXPECT_EQ(mix[1].atoms.size(), 2u);
  EXPECT_EQ(mix[0].atoms.size(), 1u);
  EXPECT_EQ(mix[0].atoms[0].first, tri.edge(0).truth);
  EXPECT_THROW(mixtures_from_json(tri, nlohmann::json::object()), ParseError);
}

TEST(Erm, PointMassIsLearnedExactly) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    UncertainGraph g = gen_random(testing::small_params(seed, 0.8));
    for (std::size_t m : {1u, 5u}) {
      RealizationSampler s = RealizationSampler::point_mass(g, seed);
      std::vector<Rational> preds = erm_train(g, s, m);
      UncertainGraph learned = g.with_predictions(preds);
      EXPECT_EQ(hop_distance(learned).k_h, 0u);
      for (EdgeId e = 0; e < g.edge_count(); ++e) EXPECT_TRUE(g.edge(e).interval.contains(preds[e]));
    }
  }
}

TEST(Erm, TotalLossDecomposesOverEdges) {
  UncertainGraph tri = gen_triangle_chain(1);
  RealizationSampler s(tri, triangle_mixtures(), 3);
  auto samples = draw(s, 100);
  std::vector<Rational> preds = erm_predictions(tri, samples);
  Rational total(0);
  for (const auto& w : samples) {
    total += Rational(static_cast<std::int64_t>(hop_distance(tri.with_truths(w).with_predictions(preds)).k_h));
  }
  total /= Rational(100);
  Rational per_edge(0);
  for (EdgeId e = 0; e < tri.edge_count(); ++e) per_edge += empirical_edge_loss(tri, e, preds[e], samples);
  EXPECT_EQ(total, per_edge);
}

TEST(Erm, CloseToTheGridOptimumOnTheTriangle) {
  UncertainGraph tri = gen_triangle_chain(1);
  auto mix = triangle_mixtures();
  Rational best = expected_hop_distance(tri, mix, grid_optimal_predictions(tri, mix));
  int close = 0;
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    RealizationSampler s(tri, mix, 1000 + trial);
    Rational got = expected_hop_distance(tri, mix, erm_train(tri, s, 200));
    EXPECT_GE(got, best);
    close += got <= best + q(1, 2);
  }
  EXPECT_GE(close, 45);
}

TEST(Erm, MoreSamplesDoNotHurt) {
  UncertainGraph tri = gen_triangle_chain(1);
  auto mix = triangle_mixtures();
  int ok = 0;
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    RealizationSampler small(tri, mix, 2000 + trial);
    RealizationSampler large(tri, mix, 3000 + trial);
    Rational few = expected_hop_distance(tri, mix, erm_train(tri, small, 10));
    Rational many = expected_hop_distance(tri, mix, erm_train(tri, large, 400));
    ok += many <= few + q(1, 2);
  }
  EXPECT_GT(ok, 25);
}

TEST(Erm, RejectsEmptyTraining) {
  UncertainGraph tri = gen_triangle_chain(1);
  RealizationSampler s = RealizationSampler::point_mass(tri, 0);
  EXPECT_THROW(erm_train(tri, s, 0), InvalidParams);
}

}  // namespace
}  // namespace mstu
