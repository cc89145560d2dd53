#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mstu/working_graph.hpp"

namespace mstu {

using Matching = std::map<EdgeId, EdgeId>;  // stored in both directions

// Bipartite graph over the non-trivial edges: tree edges of T_L on the left,
// non-tree edges on the right, joined when the tree edge lies on the cycle of
// the non-tree edge and their intervals intersect.
struct VertexCoverInstance {
  std::vector<EdgeId> left;
  std::vector<EdgeId> right;
  std::set<std::pair<EdgeId, EdgeId>> edges;  // (left, right)
  Matching matching;
  std::vector<EdgeId> cover;

  bool has_edge(EdgeId a, EdgeId b) const;
  std::optional<EdgeId> partner(EdgeId e) const;
  std::size_t matching_size() const { return matching.size() / 2; }
  std::vector<EdgeId> neighbours(EdgeId e) const;
};

// Requires unique T_L = T_U. When `require_prediction_free` is set, also
// requires that every cycle satisfies pred(f) >= U_e and pred(e) <= L_f.
// Pairs of `seed` that are still edges are kept; the rest of the maximum
// matching is grown by augmenting paths from left vertices in id order.
VertexCoverInstance build_vc_instance(const WorkingGraph& g, const Matching* seed = nullptr,
                                      bool require_prediction_free = true);

// The cycle condition characterizing instances without prediction-mandatory edges.
bool prediction_free_by_cycles(const WorkingGraph& g);

}  // namespace mstu
