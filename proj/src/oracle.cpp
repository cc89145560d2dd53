#include "mstu/oracle.hpp"

#include <algorithm>

#include "mstu/errors.hpp"
#include "mstu/limit_trees.hpp"
#include "mstu/union_find.hpp"

namespace mstu {

namespace {

std::vector<EdgeId> unrevealed(const WorkingGraph& state) {
  std::vector<EdgeId> out;
  for (EdgeId e : state.present_edges()) {
    if (!state.is_trivial(e)) out.push_back(e);
  }
  return out;
}

bool solved_after(const WorkingGraph& state, const std::vector<EdgeId>& queries) {
  WorkingGraph scratch = state;
  for (EdgeId e : queries) {
    if (scratch.present(e) && !scratch.is_trivial(e)) scratch.reveal(e);
  }
  return is_solved(scratch).has_value();
}

// Calls visit(subset) for every k-subset of `items` in lexicographic order of
// positions until visit returns false.
template <typename Visit>
void for_each_subset(const std::vector<EdgeId>& items, std::size_t k, Visit visit) {
  std::size_t n = items.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<EdgeId> subset(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
    if (!visit(subset)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

FeasibilityVerdict is_feasible(const WorkingGraph& state, const std::vector<EdgeId>& queries) {
  WorkingGraph scratch = state;
  for (EdgeId e : queries) {
    if (scratch.present(e) && !scratch.is_trivial(e)) scratch.reveal(e);
  }
  FeasibilityVerdict verdict;
  verdict.witness_tree = is_solved(scratch);
  verdict.feasible = verdict.witness_tree.has_value();
  return verdict;
}

FeasibilityVerdict is_feasible(const UncertainGraph& graph, const std::vector<EdgeId>& queries, ValueSource source) {
  return is_feasible(WorkingGraph(graph, source), queries);
}

std::vector<EdgeId> mandatory_edges(const WorkingGraph& state) {
  std::vector<EdgeId> open = unrevealed(state);
  std::vector<EdgeId> out;
  for (EdgeId e : open) {
    std::vector<EdgeId> others;
    for (EdgeId g : open) {
      if (g != e) others.push_back(g);
    }
    if (!solved_after(state, others)) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> mandatory_edges(const UncertainGraph& graph, ValueSource source) {
  return mandatory_edges(WorkingGraph(graph, source));
}

std::vector<EdgeId> prediction_mandatory_edges(const WorkingGraph& state) {
  return mandatory_edges(state.assuming_predictions());
}

std::vector<EdgeId> prediction_mandatory_edges(const UncertainGraph& graph) {
  return mandatory_edges(graph, ValueSource::Predictions);
}

OptResult opt_brute_force(const WorkingGraph& state, bool all_sets, std::size_t cap) {
  std::vector<EdgeId> open = unrevealed(state);
  if (open.size() > cap) {
    throw CapExceeded("instance has " + std::to_string(open.size()) + " non-trivial edges, oracle cap is " +
                      std::to_string(cap));
  }
  std::vector<EdgeId> seed = mandatory_edges(state);
  std::vector<EdgeId> rest;
  std::set_difference(open.begin(), open.end(), seed.begin(), seed.end(), std::back_inserter(rest));

  OptResult result;
  std::vector<std::vector<EdgeId>> found;
  for (std::size_t k = 0; k <= rest.size(); ++k) {
    for_each_subset(rest, k, [&](const std::vector<EdgeId>& subset) {
      std::vector<EdgeId> candidate = seed;
      candidate.insert(candidate.end(), subset.begin(), subset.end());
      std::sort(candidate.begin(), candidate.end());
      if (solved_after(state, candidate)) {
        found.push_back(std::move(candidate));
        return all_sets;
      }
      return true;
    });
    if (!found.empty()) break;
  }
  if (found.empty()) throw std::logic_error("revealing every edge did not solve the instance");
  result.size = found.front().size();
  result.one_optimal_set = found.front();
  if (all_sets) result.all_optimal_sets = std::move(found);
  return result;
}

OptResult opt_brute_force(const UncertainGraph& graph, ValueSource source, bool all_sets, std::size_t cap) {
  return opt_brute_force(WorkingGraph(graph, source), all_sets, cap);
}

bool is_witness_set(const OptResult& opt, const std::vector<EdgeId>& set) {
  if (!opt.all_optimal_sets) throw std::invalid_argument("is_witness_set needs all optimal sets");
  for (const std::vector<EdgeId>& q : *opt.all_optimal_sets) {
    bool hit = std::any_of(set.begin(), set.end(),
                           [&](EdgeId e) { return std::binary_search(q.begin(), q.end(), e); });
    if (!hit) return false;
  }
  return true;
}

bool sampled_tree_is_minimal(const WorkingGraph& state, const std::vector<EdgeId>& tree, std::size_t samples,
                             std::mt19937_64& rng) {
  constexpr std::int64_t kGrid = 1024;
  std::vector<EdgeId> edges = state.present_edges();
  std::uniform_int_distribution<std::int64_t> step(1, kGrid - 1);
  std::vector<Rational> weight(state.edge_count());
  for (std::size_t s = 0; s < samples; ++s) {
    for (EdgeId e : edges) {
      if (state.is_trivial(e)) {
        weight[e] = state.lower(e);
      } else {
        weight[e] = state.lower(e) + (state.upper(e) - state.lower(e)) * Rational(step(rng), kGrid);
      }
    }
    std::vector<EdgeId> order = edges;
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      return weight[a] != weight[b] ? weight[a] < weight[b] : a < b;
    });
    UnionFind mst(state.vertex_count());
    Rational best(0);
    for (EdgeId e : order) {
      auto [a, b] = state.endpoints(e);
      if (mst.unite(a, b)) best += weight[e];
    }
    UnionFind check(state.vertex_count());
    Rational total(0);
    for (EdgeId e : tree) {
      auto [a, b] = state.endpoints(e);
      if (!check.unite(a, b)) return false;
      total += weight[e];
    }
    for (EdgeId e : edges) {
      auto [a, b] = state.endpoints(e);
      if (check.find(a) != check.find(b)) return false;
    }
    if (total != best) return false;
  }
  return true;
}

}  // namespace mstu
