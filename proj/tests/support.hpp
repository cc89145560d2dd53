#pragma once

// Independent reference implementations for the tests. Nothing here uses
// the limit-tree or oracle code of the library.

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "mstu/generators.hpp"
#include "mstu/instance_io.hpp"
#include "mstu/working_graph.hpp"

namespace mstu::testing {

inline UncertainGraph fixture(const std::string& name) {
  return load_instance(std::string(MSTU_DATA_DIR) + "/" + name);
}

inline EdgeId id_of(const UncertainGraph& g, const std::string& name) { return *g.find(name); }

inline std::vector<EdgeId> ids_of(const UncertainGraph& g, std::initializer_list<const char*> names) {
  std::vector<EdgeId> out;
  for (const char* n : names) out.push_back(id_of(g, n));
  std::sort(out.begin(), out.end());
  return out;
}

inline Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

struct Multigraph {
  std::vector<VertexId> vertices;
  std::map<EdgeId, std::pair<VertexId, VertexId>> ends;
};

inline Multigraph current_multigraph(const WorkingGraph& g) {
  Multigraph mg;
  std::set<VertexId> reps;
  for (VertexId v = 0; v < g.vertex_count(); ++v) reps.insert(g.representative(v));
  mg.vertices.assign(reps.begin(), reps.end());
  for (EdgeId e : g.present_edges()) mg.ends[e] = g.endpoints(e);
  return mg;
}

// Every spanning tree of the multigraph, as sorted edge lists.
inline std::vector<std::vector<EdgeId>> spanning_trees(const Multigraph& mg) {
  std::vector<EdgeId> edges;
  for (const auto& [e, _] : mg.ends) edges.push_back(e);
  std::size_t need = mg.vertices.size() - 1;
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (chosen.size() == need) {
      std::map<VertexId, VertexId> parent;
      for (VertexId v : mg.vertices) parent[v] = v;
      std::function<VertexId(VertexId)> find = [&](VertexId v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
      for (EdgeId e : chosen) {
        auto [a, b] = mg.ends.at(e);
        VertexId ra = find(a), rb = find(b);
        if (ra == rb) return;
        parent[ra] = rb;
      }
      out.push_back(chosen);
      return;
    }
    if (edges.size() - i < need - chosen.size()) return;
    chosen.push_back(edges[i]);
    go(i + 1);
    chosen.pop_back();
    go(i + 1);
  };
  go(0);
  return out;
}

// Edges of the tree path between a and b, found by breadth-first search.
inline std::vector<EdgeId> tree_path(const Multigraph& mg, const std::vector<EdgeId>& tree, VertexId a, VertexId b) {
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj;
  for (EdgeId e : tree) {
    auto [u, v] = mg.ends.at(e);
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  std::map<VertexId, std::pair<VertexId, EdgeId>> came;
  std::queue<VertexId> todo;
  todo.push(a);
  came[a] = {a, 0};
  while (!todo.empty()) {
    VertexId x = todo.front();
    todo.pop();
    for (auto [y, e] : adj[x]) {
      if (came.count(y)) continue;
      came[y] = {x, e};
      todo.push(y);
    }
  }
  std::vector<EdgeId> path;
  for (VertexId x = b; x != a; x = came.at(x).first) path.push_back(came.at(x).second);
  std::sort(path.begin(), path.end());
  return path;
}

// A tree that is minimum for every realization of the current intervals:
// each cycle edge's upper limit is at most the lower limit of the non-tree edge.
inline std::vector<std::vector<EdgeId>> always_minimum_trees(const WorkingGraph& g) {
  Multigraph mg = current_multigraph(g);
  std::vector<std::vector<EdgeId>> out;
  for (const auto& tree : spanning_trees(mg)) {
    bool ok = true;
    std::set<EdgeId> in(tree.begin(), tree.end());
    for (const auto& [f, ends] : mg.ends) {
      if (in.count(f)) continue;
      for (EdgeId e : tree_path(mg, tree, ends.first, ends.second)) {
        if (g.upper(e) > g.lower(f)) ok = false;
      }
    }
    if (ok) out.push_back(tree);
  }
  return out;
}

inline bool naive_feasible(const UncertainGraph& graph, const std::vector<EdgeId>& queries, ValueSource source) {
  WorkingGraph w(graph, source);
  for (EdgeId e : queries) w.reveal(e);
  return !always_minimum_trees(w).empty();
}

// Smallest feasible query set size by plain subset enumeration.
inline std::size_t naive_opt(const UncertainGraph& graph, ValueSource source) {
  std::vector<EdgeId> open;
  for (const UncertainEdge& e : graph.edges()) {
    if (!e.interval.is_trivial()) open.push_back(e.id);
  }
  std::size_t best = open.size();
  for (unsigned mask = 0; mask < (1u << open.size()); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= best) continue;
    std::vector<EdgeId> qs;
    for (std::size_t i = 0; i < open.size(); ++i) {
      if (mask >> i & 1u) qs.push_back(open[i]);
    }
    if (naive_feasible(graph, qs, source)) best = size;
  }
  return best;
}

inline RandomParams small_params(std::uint64_t seed, double error_rate = 0.0) {
  RandomParams p;
  p.vertices = 3 + seed % 4;
  p.extra_edges = 1 + seed % 5;
  p.overlap_density = 0.2 + 0.1 * static_cast<double>(seed % 6);
  p.error_rate = error_rate;
  p.seed = seed;
  return p;
}

}  // namespace mstu::testing
