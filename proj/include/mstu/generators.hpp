#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "mstu/graph.hpp"

namespace mstu {

// Cycle e_0..e_beta: e_1..e_beta on (1,3) predicted 3/2, e_0 on (2,4)
// predicted 5/2. Truths equal predictions unless `adversarial`, which sets
// w(e_beta) = 5/2 and w(e_0) = 7/2.
UncertainGraph gen_tradeoff_cycle(std::int64_t beta, bool adversarial);

// Path p_1..p_n on (0,2) predicted 1/2 plus n parallel edges q_1..q_n on
// (1,3) predicted 5/2 between the path endpoints. Only p_n is mispredicted
// (true value 3/2).
UncertainGraph gen_path_parallel(std::int64_t n);

// n triangles with intervals (0,2), (1,3), (-3,-2), copy i shifted by 10i,
// linked in a chain by trivial edges of weight -100. `truths_match` sets the
// true values to the predictions.
UncertainGraph gen_triangle_chain(std::int64_t n, bool truths_match = false);

enum class FlipVariant { AllSpanning, OneSpanning };

// Path l_1..l_k (k = n/2) with k edges f_1..f_k closing cycles over it.
// AllSpanning: every f joins the path endpoints. OneSpanning: f_1 joins the
// endpoints, the others run parallel to l_1.
UncertainGraph gen_vc_flip(std::int64_t n, FlipVariant variant);

struct RandomParams {
  std::size_t vertices = 5;
  std::size_t extra_edges = 3;
  double overlap_density = 0.5;
  double error_rate = 0.0;
  double trivial_rate = 0.1;
  std::uint64_t seed = 0;
};

RandomParams random_params_from_json(const nlohmann::json& doc);

UncertainGraph gen_random(const RandomParams& params);

// Dispatch by family name with a JSON parameter object.
UncertainGraph generate(const std::string& family, const nlohmann::json& params);

}  // namespace mstu
