#include "mstu/limit_trees.hpp"

#include <algorithm>
#include <deque>

#include "mstu/errors.hpp"
#include "mstu/union_find.hpp"

namespace mstu {

LimitValue lower_key(const WorkingGraph& g, EdgeId e) {
  if (g.is_trivial(e)) return {g.lower(e), 0};
  return {g.lower(e), +1};
}

LimitValue upper_key(const WorkingGraph& g, EdgeId e) {
  if (g.is_trivial(e)) return {g.upper(e), 0};
  return {g.upper(e), -1};
}

namespace {

template <typename Key>
std::vector<EdgeId> kruskal(const WorkingGraph& g, Key key) {
  std::vector<EdgeId> order = g.present_edges();
  std::vector<LimitValue> keys(g.edge_count());
  for (EdgeId e : order) keys[e] = key(g, e);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return a < b;
  });
  UnionFind uf(g.vertex_count());
  std::vector<EdgeId> tree;
  for (EdgeId e : order) {
    auto [a, b] = g.endpoints(e);
    if (uf.unite(a, b)) tree.push_back(e);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace

std::vector<EdgeId> lower_limit_tree(const WorkingGraph& g) { return kruskal(g, lower_key); }

std::vector<EdgeId> upper_limit_tree(const WorkingGraph& g) { return kruskal(g, upper_key); }

SpanningTree::SpanningTree(const WorkingGraph& g, std::vector<EdgeId> tree_edges)
    : graph_(&g), tree_(std::move(tree_edges)) {
  std::sort(tree_.begin(), tree_.end());
  std::size_t n = g.vertex_count();
  in_tree_.assign(g.edge_count(), 0);
  for (EdgeId e : tree_) in_tree_[e] = 1;
  for (EdgeId e : g.present_edges()) {
    if (!in_tree_[e]) non_tree_.push_back(e);
  }

  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId e : tree_) {
    auto [a, b] = g.endpoints(e);
    adj[a].push_back({b, e});
    adj[b].push_back({a, e});
  }
  parent_.assign(n, n);
  parent_edge_.assign(n, g.edge_count());
  depth_.assign(n, 0);
  tin_.assign(n, 0);
  tout_.assign(n, 0);

  // Iterative DFS from the component containing vertex 0.
  VertexId root = g.representative(0);
  std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  parent_[root] = root;
  std::size_t clock = 0;
  tin_[root] = clock++;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < adj[v].size()) {
      auto [w, e] = adj[v][next++];
      if (seen[w]) continue;
      seen[w] = 1;
      parent_[w] = v;
      parent_edge_[w] = e;
      depth_[w] = depth_[v] + 1;
      tin_[w] = clock++;
      stack.push_back({w, 0});
    } else {
      tout_[v] = clock++;
      stack.pop_back();
    }
  }
}

bool SpanningTree::contains(EdgeId e) const { return e < in_tree_.size() && in_tree_[e]; }

bool SpanningTree::in_subtree(VertexId v, VertexId root) const {
  return tin_[root] <= tin_[v] && tout_[v] <= tout_[root];
}

std::vector<EdgeId> SpanningTree::cycle_of(EdgeId f) const {
  if (!graph_->present(f)) throw UnknownEdge("edge " + std::to_string(f) + " is not present");
  if (contains(f)) throw WrongSide("cycle_of expects a non-tree edge, got tree edge " + std::to_string(f));
  auto [a, b] = graph_->endpoints(f);
  std::vector<EdgeId> out{f};
  while (a != b) {
    if (depth_[a] < depth_[b]) std::swap(a, b);
    out.push_back(parent_edge_[a]);
    a = parent_[a];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> SpanningTree::cut_of(EdgeId l) const {
  if (!graph_->present(l)) throw UnknownEdge("edge " + std::to_string(l) + " is not present");
  if (!contains(l)) throw WrongSide("cut_of expects a tree edge, got non-tree edge " + std::to_string(l));
  auto [a, b] = graph_->endpoints(l);
  VertexId child = depth_[a] > depth_[b] ? a : b;
  std::vector<EdgeId> out{l};
  for (EdgeId e : non_tree_) {
    auto [x, y] = graph_->endpoints(e);
    if (in_subtree(x, child) != in_subtree(y, child)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LimitTrees compute_limit_trees(const WorkingGraph& g) {
  LimitTrees out;
  out.lower = lower_limit_tree(g);
  out.upper = upper_limit_tree(g);
  SpanningTree tree(g, out.lower);
  out.non_tree_order = tree.non_tree_edges();
  std::stable_sort(out.non_tree_order.begin(), out.non_tree_order.end(), [&](EdgeId a, EdgeId b) {
    if (g.lower(a) != g.lower(b)) return g.lower(a) < g.lower(b);
    return a < b;
  });
  for (EdgeId f : tree.non_tree_edges()) out.cycles[f] = tree.cycle_of(f);
  for (EdgeId l : tree.edges()) out.cuts[l] = tree.cut_of(l);
  return out;
}

namespace {

bool both_trivial(const WorkingGraph& g, EdgeId a, EdgeId b) { return g.is_trivial(a) && g.is_trivial(b); }

// First non-tree edge f and cycle edge l with equal upper keys, as (f, l).
std::optional<std::pair<EdgeId, EdgeId>> upper_tie(const WorkingGraph& g, const SpanningTree& tree) {
  for (EdgeId f : tree.non_tree_edges()) {
    for (EdgeId l : tree.cycle_of(f)) {
      if (l == f || both_trivial(g, l, f)) continue;
      if (!(upper_key(g, l) < upper_key(g, f))) return std::pair{f, l};
    }
  }
  return std::nullopt;
}

// First tree edge l and cut edge f with equal lower keys, as (l, f).
std::optional<std::pair<EdgeId, EdgeId>> lower_tie(const WorkingGraph& g, const SpanningTree& tree) {
  for (EdgeId l : tree.edges()) {
    for (EdgeId f : tree.cut_of(l)) {
      if (f == l || both_trivial(g, l, f)) continue;
      if (!(lower_key(g, l) < lower_key(g, f))) return std::pair{l, f};
    }
  }
  return std::nullopt;
}

}  // namespace

bool has_unique_limit_trees(const WorkingGraph& g) {
  std::vector<EdgeId> lower = lower_limit_tree(g);
  if (lower != upper_limit_tree(g)) return false;
  SpanningTree tree(g, lower);
  return !upper_tie(g, tree) && !lower_tie(g, tree);
}

std::optional<std::vector<EdgeId>> is_solved(const WorkingGraph& g) {
  std::vector<EdgeId> lower = lower_limit_tree(g);
  if (lower != upper_limit_tree(g)) return std::nullopt;
  SpanningTree tree(g, lower);
  for (EdgeId f : tree.non_tree_edges()) {
    for (EdgeId e : tree.cycle_of(f)) {
      if (e != f && g.lower(f) < g.upper(e)) return std::nullopt;
    }
  }
  return lower;
}

std::optional<std::vector<EdgeId>> verified_tree(const WorkingGraph& g) {
  auto tree = is_solved(g);
  if (!tree) return std::nullopt;
  std::vector<EdgeId> out = g.contracted_edges();
  out.insert(out.end(), tree->begin(), tree->end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> ensure_unique_limit_trees(WorkingGraph& g, bool reduce) {
  std::vector<EdgeId> queried;
  auto query = [&](EdgeId e) {
    g.reveal(e);
    queried.push_back(e);
  };
  for (;;) {
    std::vector<EdgeId> lower = lower_limit_tree(g);
    std::vector<EdgeId> upper = upper_limit_tree(g);
    if (lower != upper) {
      std::vector<EdgeId> diff;
      std::set_difference(lower.begin(), lower.end(), upper.begin(), upper.end(), std::back_inserter(diff));
      auto it = std::find_if(diff.begin(), diff.end(), [&](EdgeId e) { return !g.is_trivial(e); });
      if (it == diff.end()) throw std::logic_error("limit trees differ only in trivial edges");
      query(*it);
      continue;
    }
    SpanningTree tree(g, lower);
    // Swapping f into T_U in place of l leaves T_L - T_U' = {l}.
    if (auto tie = upper_tie(g, tree)) {
      query(tie->second);
      continue;
    }
    // Swapping f into T_L in place of l leaves T_L' - T_U = {f}.
    if (auto tie = lower_tie(g, tree)) {
      query(tie->second);
      continue;
    }
    break;
  }
  if (reduce) reduce_verified(g);
  return queried;
}

std::vector<EdgeId> reduce_verified(WorkingGraph& g) {
  SpanningTree tree(g, lower_limit_tree(g));
  std::vector<EdgeId> to_delete;
  std::vector<EdgeId> to_contract;
  for (EdgeId f : tree.non_tree_edges()) {
    std::vector<EdgeId> cycle = tree.cycle_of(f);
    if (std::all_of(cycle.begin(), cycle.end(), [&](EdgeId e) { return e == f || g.upper(e) <= g.lower(f); })) {
      to_delete.push_back(f);
    }
  }
  for (EdgeId l : tree.edges()) {
    std::vector<EdgeId> cut = tree.cut_of(l);
    if (std::all_of(cut.begin(), cut.end(), [&](EdgeId f) { return f == l || g.upper(l) <= g.lower(f); })) {
      to_contract.push_back(l);
    }
  }
  std::vector<EdgeId> removed;
  for (EdgeId f : to_delete) {
    if (!g.present(f)) continue;
    g.remove(f);
    removed.push_back(f);
  }
  for (EdgeId l : to_contract) {
    if (!g.present(l)) continue;
    g.contract(l);
    removed.push_back(l);
  }
  return removed;
}

}  // namespace mstu
