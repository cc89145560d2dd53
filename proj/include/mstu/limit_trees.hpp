#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "mstu/working_graph.hpp"

namespace mstu {

// A number plus an infinitesimal offset: (x,-1) < (x,0) < (x,+1).
struct LimitValue {
  Rational base;
  int eps = 0;

  std::strong_ordering operator<=>(const LimitValue& other) const {
    if (base < other.base) return std::strong_ordering::less;
    if (other.base < base) return std::strong_ordering::greater;
    return eps <=> other.eps;
  }
  bool operator==(const LimitValue& other) const = default;
};

// (L,+1) for open edges, (w,0) for trivial ones.
LimitValue lower_key(const WorkingGraph& g, EdgeId e);
// (U,-1) for open edges, (w,0) for trivial ones.
LimitValue upper_key(const WorkingGraph& g, EdgeId e);

// Kruskal over present edges ordered by (key, id). Result sorted by id.
std::vector<EdgeId> lower_limit_tree(const WorkingGraph& g);
std::vector<EdgeId> upper_limit_tree(const WorkingGraph& g);

// A spanning tree of the current (contracted) graph with path and cut queries.
class SpanningTree {
 public:
  SpanningTree(const WorkingGraph& g, std::vector<EdgeId> tree_edges);

  bool contains(EdgeId e) const;
  const std::vector<EdgeId>& edges() const { return tree_; }
  const std::vector<EdgeId>& non_tree_edges() const { return non_tree_; }

  // Tree path between the endpoints of f, plus f. Sorted by id.
  std::vector<EdgeId> cycle_of(EdgeId f) const;
  // l plus every present edge joining the two components of T - l. Sorted by id.
  std::vector<EdgeId> cut_of(EdgeId l) const;

 private:
  bool in_subtree(VertexId v, VertexId root) const;

  const WorkingGraph* graph_;
  std::vector<EdgeId> tree_;
  std::vector<EdgeId> non_tree_;
  std::vector<char> in_tree_;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> tin_;
  std::vector<std::size_t> tout_;
};

struct LimitTrees {
  std::vector<EdgeId> lower;
  std::vector<EdgeId> upper;
  // Non-tree edges of the lower limit tree by non-decreasing lower limit, id tie-break.
  std::vector<EdgeId> non_tree_order;
  std::map<EdgeId, std::vector<EdgeId>> cycles;
  std::map<EdgeId, std::vector<EdgeId>> cuts;

  bool equal() const { return lower == upper; }
};

LimitTrees compute_limit_trees(const WorkingGraph& g);

// T_L = T_U and every tree/non-tree exchange is strictly worse under both keys.
// Ties between two trivial edges cannot be broken by queries and are ignored.
bool has_unique_limit_trees(const WorkingGraph& g);

// The tree T_L when T_L = T_U and every non-tree edge f satisfies
// upper(e) <= lower(f) for all e on its cycle; otherwise nothing.
std::optional<std::vector<EdgeId>> is_solved(const WorkingGraph& g);

// Contracted edges plus the tree returned by is_solved.
std::optional<std::vector<EdgeId>> verified_tree(const WorkingGraph& g);

// Queries edges that every feasible query set contains until the limit trees
// coincide and are unique. Returns the queried edges in order. With `reduce`,
// verified edges are contracted or deleted afterwards.
std::vector<EdgeId> ensure_unique_limit_trees(WorkingGraph& g, bool reduce);

// Contracts tree edges verified minimal in their cut and deletes non-tree edges
// verified maximal on their cycle (with respect to T_L). Returns removed edges.
std::vector<EdgeId> reduce_verified(WorkingGraph& g);

}  // namespace mstu
