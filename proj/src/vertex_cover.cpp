#include "mstu/vertex_cover.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "mstu/errors.hpp"
#include "mstu/limit_trees.hpp"

namespace mstu {

bool VertexCoverInstance::has_edge(EdgeId a, EdgeId b) const {
  return edges.count({a, b}) > 0 || edges.count({b, a}) > 0;
}

std::optional<EdgeId> VertexCoverInstance::partner(EdgeId e) const {
  auto it = matching.find(e);
  if (it == matching.end()) return std::nullopt;
  return it->second;
}

std::vector<EdgeId> VertexCoverInstance::neighbours(EdgeId e) const {
  std::vector<EdgeId> out;
  for (const auto& [l, r] : edges) {
    if (l == e) out.push_back(r);
    if (r == e) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool prediction_free_by_cycles(const WorkingGraph& g) {
  SpanningTree tree(g, lower_limit_tree(g));
  for (EdgeId f : tree.non_tree_edges()) {
    if (g.is_trivial(f)) continue;
    for (EdgeId e : tree.cycle_of(f)) {
      if (e == f || g.is_trivial(e)) continue;
      if (g.prediction(f) < g.upper(e) || g.prediction(e) > g.lower(f)) return false;
    }
  }
  return true;
}

VertexCoverInstance build_vc_instance(const WorkingGraph& g, const Matching* seed, bool require_prediction_free) {
  if (!has_unique_limit_trees(g)) throw PreconditionViolated("vertex cover instance needs unique T_L = T_U");
  if (require_prediction_free && !prediction_free_by_cycles(g)) {
    throw PreconditionViolated("vertex cover instance needs a prediction mandatory free instance");
  }
  VertexCoverInstance vc;
  SpanningTree tree(g, lower_limit_tree(g));
  for (EdgeId e : tree.edges()) {
    if (!g.is_trivial(e)) vc.left.push_back(e);
  }
  for (EdgeId f : tree.non_tree_edges()) {
    if (g.is_trivial(f)) continue;
    vc.right.push_back(f);
    for (EdgeId e : tree.cycle_of(f)) {
      if (e == f || g.is_trivial(e)) continue;
      if (g.interval(e).intersects(g.interval(f))) vc.edges.insert({e, f});
    }
  }

  std::map<EdgeId, std::vector<EdgeId>> adj;
  for (const auto& [l, r] : vc.edges) {
    adj[l].push_back(r);
    adj[r].push_back(l);
  }
  for (auto& [v, list] : adj) std::sort(list.begin(), list.end());

  Matching& match = vc.matching;
  if (seed) {
    for (const auto& [a, b] : *seed) {
      if (vc.edges.count({a, b}) && !match.count(a) && !match.count(b)) {
        match[a] = b;
        match[b] = a;
      }
    }
  }

  std::set<EdgeId> visited;
  std::function<bool(EdgeId)> augment = [&](EdgeId l) {
    for (EdgeId r : adj[l]) {
      if (!visited.insert(r).second) continue;
      auto it = match.find(r);
      if (it == match.end() || augment(it->second)) {
        match[l] = r;
        match[r] = l;
        return true;
      }
    }
    return false;
  };
  for (EdgeId l : vc.left) {
    if (match.count(l)) continue;
    visited.clear();
    augment(l);
  }

  // Alternating reachability from unmatched left vertices.
  std::set<EdgeId> reached;
  std::deque<EdgeId> queue;
  for (EdgeId l : vc.left) {
    if (!match.count(l)) {
      reached.insert(l);
      queue.push_back(l);
    }
  }
  while (!queue.empty()) {
    EdgeId l = queue.front();
    queue.pop_front();
    for (EdgeId r : adj[l]) {
      auto it = match.find(l);
      if (it != match.end() && it->second == r) continue;
      if (!reached.insert(r).second) continue;
      auto back = match.find(r);
      if (back != match.end() && reached.insert(back->second).second) queue.push_back(back->second);
    }
  }
  for (EdgeId l : vc.left) {
    if (!reached.count(l)) vc.cover.push_back(l);
  }
  for (EdgeId r : vc.right) {
    if (reached.count(r)) vc.cover.push_back(r);
  }
  std::sort(vc.cover.begin(), vc.cover.end());
  return vc;
}

}  // namespace mstu
