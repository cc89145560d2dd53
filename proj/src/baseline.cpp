#include <algorithm>

#include "mstu/limit_trees.hpp"
#include "mstu/strategies.hpp"

namespace mstu {

namespace {

bool contained_in(const Interval& inner, const Interval& outer) {
  return outer.lower() <= inner.lower() && inner.upper() <= outer.upper();
}

}  // namespace

std::size_t run_baseline(WorkingGraph& g) {
  std::size_t start = g.query_count();
  std::size_t cap = g.edge_count() * g.edge_count() + 2;
  for (std::size_t round = 0;; ++round) {
    if (round > cap) throw std::logic_error("baseline exceeded its iteration cap");
    ensure_unique_limit_trees(g, true);
    if (is_solved(g)) break;

    LimitTrees lt = compute_limit_trees(g);
    EdgeId f = lt.non_tree_order.front();
    std::optional<EdgeId> l;
    for (EdgeId e : lt.cycles.at(f)) {
      if (e == f || !g.interval(e).intersects(g.interval(f))) continue;
      if (!l || g.upper(*l) < g.upper(e)) l = e;
    }
    if (!l) throw std::logic_error("unsolved reduced instance without an overlapping cycle edge");

    if (contained_in(g.interval(*l), g.interval(f))) {
      g.reveal(f);
      continue;
    }
    g.reveal(*l);
    ensure_unique_limit_trees(g, true);
    if (g.present(f) && !g.is_trivial(f)) g.reveal(f);
  }
  return g.query_count() - start;
}

}  // namespace mstu
