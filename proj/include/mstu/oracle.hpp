#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "mstu/working_graph.hpp"

namespace mstu {

constexpr std::size_t kDefaultOracleCap = 16;

struct FeasibilityVerdict {
  bool feasible = false;
  std::optional<std::vector<EdgeId>> witness_tree;
};

struct OptResult {
  std::size_t size = 0;
  std::vector<EdgeId> one_optimal_set;
  std::optional<std::vector<std::vector<EdgeId>>> all_optimal_sets;
};

// The functions taking a WorkingGraph evaluate the current partially revealed
// state; unrevealed edges reveal whatever hidden values that state carries.

FeasibilityVerdict is_feasible(const WorkingGraph& state, const std::vector<EdgeId>& queries);
FeasibilityVerdict is_feasible(const UncertainGraph& graph, const std::vector<EdgeId>& queries, ValueSource source);

// e is mandatory iff revealing every other unrevealed edge leaves the state unsolved.
std::vector<EdgeId> mandatory_edges(const WorkingGraph& state);
std::vector<EdgeId> mandatory_edges(const UncertainGraph& graph, ValueSource source);
std::vector<EdgeId> prediction_mandatory_edges(const WorkingGraph& state);
std::vector<EdgeId> prediction_mandatory_edges(const UncertainGraph& graph);

// Minimum feasible query set by subset enumeration in increasing size, every
// candidate containing the mandatory edges. Throws CapExceeded when the state
// has more unrevealed edges than `cap`.
OptResult opt_brute_force(const WorkingGraph& state, bool all_sets = false, std::size_t cap = kDefaultOracleCap);
OptResult opt_brute_force(const UncertainGraph& graph, ValueSource source, bool all_sets = false,
                          std::size_t cap = kDefaultOracleCap);

// True iff every optimal set contains at least one edge of `set`.
bool is_witness_set(const OptResult& opt, const std::vector<EdgeId>& set);

// Draws `samples` realizations of the unrevealed open intervals uniformly on a
// fine rational grid and checks that `tree` is a minimum spanning tree of the
// present edges in each. Independent of the analytic solved condition.
bool sampled_tree_is_minimal(const WorkingGraph& state, const std::vector<EdgeId>& tree, std::size_t samples,
                             std::mt19937_64& rng);

}  // namespace mstu
