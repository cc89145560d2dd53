#include <gtest/gtest.h>

#include "mstu/error_metrics.hpp"
#include "mstu/errors.hpp"
#include "mstu/generators.hpp"
#include "mstu/instance_io.hpp"
#include "mstu/limit_trees.hpp"
#include "mstu/oracle.hpp"
#include "mstu/vertex_cover.hpp"
#include "support.hpp"

namespace mstu {
namespace {

using testing::ids_of;

std::size_t opt_of(const UncertainGraph& g) { return opt_brute_force(g, ValueSource::Truth).size; }

TEST(TradeoffCycle, OptimumSizes) {
  EXPECT_EQ(opt_of(gen_tradeoff_cycle(2, false)), 2u);
  UncertainGraph adv = gen_tradeoff_cycle(2, true);
  OptResult r = opt_brute_force(adv, ValueSource::Truth, true);
  EXPECT_EQ(r.size, 1u);
  EXPECT_EQ(r.all_optimal_sets->size(), 1u);
  EXPECT_EQ(r.one_optimal_set, ids_of(adv, {"e0"}));
  for (std::int64_t beta = 2; beta <= 6; ++beta) {
    EXPECT_EQ(opt_of(gen_tradeoff_cycle(beta, false)), static_cast<std::size_t>(beta));
    EXPECT_EQ(opt_of(gen_tradeoff_cycle(beta, true)), 1u);
  }
  UncertainGraph five = gen_tradeoff_cycle(5, false);
  EXPECT_EQ(five.edge_count(), 6u);
  EXPECT_EQ(hop_distance(five).k_h, 0u);
  EXPECT_THROW(gen_tradeoff_cycle(1, false), InvalidParams);
}

TEST(PathParallel, ErrorsAndOptimum) {
  UncertainGraph one = gen_path_parallel(1);
  EXPECT_EQ(one.edge_count(), 2u);
  EXPECT_EQ(one.vertex_count(), 2u);
  for (std::int64_t n = 1; n <= 5; ++n) {
    UncertainGraph g = gen_path_parallel(n);
    ErrorReport r = hop_distance(g);
    EXPECT_EQ(r.k_wrong, 1u);
    EXPECT_EQ(r.k_h, static_cast<std::size_t>(n));
    EXPECT_EQ(opt_of(g), static_cast<std::size_t>(n));
  }
}

TEST(TriangleChain, OptimumAndErrorsAddUp) {
  for (std::int64_t n = 1; n <= 4; ++n) {
    UncertainGraph g = gen_triangle_chain(n);
    EXPECT_EQ(opt_of(g), static_cast<std::size_t>(n));
    EXPECT_EQ(hop_distance(g).k_h, static_cast<std::size_t>(n));
  }
  UncertainGraph exact = gen_triangle_chain(1, true);
  EXPECT_EQ(opt_of(exact), 1u);
  EXPECT_EQ(opt_brute_force(exact, ValueSource::Truth).one_optimal_set, ids_of(exact, {"e1"}));
  EXPECT_EQ(hop_distance(exact).k_h, 0u);
}

TEST(VcFlip, CoverSizesAndOptimum) {
  for (std::int64_t n : {4, 6, 8, 10}) {
    UncertainGraph ex1 = gen_vc_flip(n, FlipVariant::AllSpanning);
    WorkingGraph w(ex1, ValueSource::Truth);
    EXPECT_EQ(build_vc_instance(w).cover.size(), static_cast<std::size_t>(n / 2));
    OptResult r = opt_brute_force(ex1, ValueSource::Truth);
    EXPECT_EQ(r.size, 2u);
    EXPECT_EQ(r.one_optimal_set, ids_of(ex1, {"f1", "l1"}));
  }
  UncertainGraph ex2 = gen_vc_flip(8, FlipVariant::OneSpanning);
  WorkingGraph w(ex2, ValueSource::Truth);
  EXPECT_EQ(build_vc_instance(w).cover.size(), 2u);
  w.reveal(*ex2.find("f1"));
  w.reveal(*ex2.find("l1"));
  ensure_unique_limit_trees(w, true);
  EXPECT_EQ(build_vc_instance(w, nullptr, false).cover.size(), 3u);
  EXPECT_THROW(gen_vc_flip(7, FlipVariant::AllSpanning), InvalidParams);
}

TEST(Random, CorrectPredictionsHaveNoError) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    ErrorReport r = hop_distance(gen_random(testing::small_params(seed, 0.0)));
    EXPECT_EQ(r.k_h, 0u);
    EXPECT_EQ(r.k_wrong, 0u);
  }
}

TEST(Random, ErrorRateControlsWrongPredictions) {
  std::size_t wrong = 0, open = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    UncertainGraph g = gen_random(testing::small_params(seed, 1.0));
    ErrorReport r = hop_distance(g);
    wrong += r.k_wrong;
    open += g.nontrivial_count();
    EXPECT_GE(r.k_h, r.k_wrong);
  }
  // Edges whose interval holds no other limit cannot be mispredicted.
  EXPECT_GT(wrong * 2, open);
}

TEST(Random, NoOverlapMeansNothingToQuery) {
  RandomParams p = testing::small_params(0, 0.5);
  p.overlap_density = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    p.seed = seed;
    p.vertices = 3 + seed % 6;
    p.extra_edges = seed % 7;
    EXPECT_EQ(opt_of(gen_random(p)), 0u);
  }
}

TEST(Random, SameSeedSameFile) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomParams p = testing::small_params(seed, 0.5);
    EXPECT_EQ(save_instance(gen_random(p)), save_instance(gen_random(p)));
  }
  RandomParams a = testing::small_params(1, 0.5);
  RandomParams b = a;
  b.seed = 2;
  EXPECT_NE(save_instance(gen_random(a)), save_instance(gen_random(b)));
}

TEST(Random, RejectsBadParameters) {
  RandomParams p;
  p.vertices = 1;
  EXPECT_THROW(gen_random(p), InvalidParams);
  p = RandomParams{};
  p.error_rate = 1.5;
  EXPECT_THROW(gen_random(p), InvalidParams);
  EXPECT_THROW(random_params_from_json(nlohmann::json::array()), InvalidParams);
}

TEST(Generate, DispatchesByFamilyName) {
  EXPECT_EQ(generate("tradeoff-cycle", {{"beta", 3}}).edge_count(), 4u);
  EXPECT_EQ(generate("path-parallel", {{"n", 2}}).edge_count(), 4u);
  EXPECT_EQ(generate("triangle-chain", {{"n", 2}}).edge_count(), 7u);
  EXPECT_EQ(generate("vc-flip", {{"variant", "ex2"}}).edge_count(), 8u);
  EXPECT_EQ(save_instance(generate("random", {{"seed", 4}, {"vertices", 5}})),
            save_instance(gen_random(RandomParams{5, 3, 0.5, 0.0, 0.1, 4})));
  EXPECT_THROW(generate("petersen", nlohmann::json::object()), InvalidParams);
  EXPECT_THROW(generate("vc-flip", {{"variant", "ex3"}}), InvalidParams);
}

}  // namespace
}  // namespace mstu
