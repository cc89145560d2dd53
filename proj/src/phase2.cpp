#include <algorithm>

#include "mstu/error_metrics.hpp"
#include "mstu/errors.hpp"
#include "mstu/limit_trees.hpp"
#include "mstu/strategies.hpp"

namespace mstu {

namespace {

void require_phase2_input(WorkingGraph& g) {
  if (!has_unique_limit_trees(g)) throw PreconditionViolated("second phase needs unique T_L = T_U");
  reduce_verified(g);
  if (!prediction_free_by_cycles(g)) throw PreconditionViolated("second phase needs a prediction mandatory free instance");
}

// Non-tree cover elements by non-decreasing lower limit, then tree cover
// elements by non-increasing upper limit.
std::vector<EdgeId> listing_order(const WorkingGraph& g, const VertexCoverInstance& vc) {
  std::vector<EdgeId> right, left;
  for (EdgeId e : vc.cover) {
    if (std::binary_search(vc.right.begin(), vc.right.end(), e)) {
      right.push_back(e);
    } else {
      left.push_back(e);
    }
  }
  std::stable_sort(right.begin(), right.end(), [&](EdgeId a, EdgeId b) {
    return g.lower(a) != g.lower(b) ? g.lower(a) < g.lower(b) : a < b;
  });
  std::stable_sort(left.begin(), left.end(), [&](EdgeId a, EdgeId b) {
    return g.upper(a) != g.upper(b) ? g.upper(b) < g.upper(a) : a < b;
  });
  right.insert(right.end(), left.begin(), left.end());
  return right;
}

void finish_with_baseline(WorkingGraph& g, Phase2Ledger& ledger) {
  ensure_unique_limit_trees(g, true);
  if (is_solved(g)) return;
  ledger.fell_back = true;
  g.transcript().phase_switch("baseline");
  run_baseline(g);
}

}  // namespace

Phase2Ledger phase2_tradeoff(WorkingGraph& g) {
  require_phase2_input(g);
  std::size_t start = g.query_count();
  Phase2Ledger ledger;
  VertexCoverInstance vc = build_vc_instance(g);
  ledger.matching_and_cover_sizes.push_back({vc.matching_size(), vc.cover.size()});

  bool error_seen = false;
  for (EdgeId e : listing_order(g, vc)) {
    if (!g.present(e) || g.is_trivial(e)) continue;
    Rational w = g.reveal(e);
    ledger.list_queries.push_back(e);
    if (auto p = vc.partner(e)) {
      ledger.hstar[e] = *p;
      ledger.deferred.insert(*p);
    }
    if (observed_relation_errors(g, e, w) != 0) {
      error_seen = true;
      break;
    }
  }
  if (error_seen) {
    for (EdgeId d : ledger.deferred) {
      if (g.present(d) && !g.is_trivial(d)) {
        g.reveal(d);
        ledger.repair_queries.push_back(d);
      }
    }
    ledger.fell_back = true;
    g.transcript().phase_switch("baseline");
    run_baseline(g);
  } else {
    finish_with_baseline(g, ledger);
  }
  ledger.queries = g.query_count() - start;
  return ledger;
}

namespace {

class ErrorSensitive {
 public:
  explicit ErrorSensitive(WorkingGraph& g) : g_(g) {}

  Phase2Ledger run() {
    require_phase2_input(g_);
    std::size_t start = g_.query_count();
    VertexCoverInstance vc = build_vc_instance(g_);
    matching_ = vc.matching;
    cover_ = vc.cover;
    record(vc);

    std::size_t cap = g_.edge_count() * g_.edge_count() + 2;
    for (std::size_t round = 0;; ++round) {
      if (round > cap) throw std::logic_error("error-sensitive phase exceeded its restart cap");
      if (!list_pass(vc)) break;
      repair();
      vc = current_;
      g_.transcript().restart("relist");
    }
    finish_with_baseline(g_, ledger_);

    std::set<EdgeId> hit;
    for (const auto& [e, p] : ledger_.hstar) hit.insert(p);
    for (EdgeId e : side_queries_) {
      (hit.count(e) ? ledger_.partner_hits : ledger_.partner_misses).push_back(e);
    }
    ledger_.queries = g_.query_count() - start;
    return ledger_;
  }

 private:
  void record(const VertexCoverInstance& vc) {
    ledger_.matching_and_cover_sizes.push_back({vc.matching_size(), vc.cover.size()});
    current_ = vc;
  }

  std::optional<EdgeId> partner(EdgeId e) const {
    auto it = matching_.find(e);
    if (it == matching_.end()) return std::nullopt;
    return it->second;
  }

  // Uniqueness queries plus the matching partner of each, until nothing changes.
  void make_unique_with_partners() {
    for (;;) {
      std::vector<EdgeId> queried = ensure_unique_limit_trees(g_, true);
      if (queried.empty()) return;
      for (EdgeId e : queried) {
        side_queries_.push_back(e);
        auto p = partner(e);
        if (p && g_.present(*p) && !g_.is_trivial(*p)) {
          g_.reveal(*p);
          side_queries_.push_back(*p);
        }
      }
    }
  }

  // Queries the listed cover. Returns true when the tree membership changed.
  bool list_pass(const VertexCoverInstance& vc) {
    std::vector<char> was_tree(g_.edge_count(), 0);
    std::vector<char> tracked(g_.edge_count(), 0);
    for (EdgeId e : lower_limit_tree(g_)) was_tree[e] = 1;
    for (EdgeId e : g_.present_edges()) tracked[e] = 1;

    for (EdgeId e : listing_order(g_, vc)) {
      if (!g_.present(e) || g_.is_trivial(e)) continue;
      g_.reveal(e);
      ledger_.list_queries.push_back(e);
      if (auto p = partner(e)) {
        ledger_.hstar[e] = *p;
        ledger_.deferred.insert(*p);
      }
      make_unique_with_partners();
      if (membership_changed(was_tree, tracked)) return true;
    }
    return false;
  }

  bool membership_changed(const std::vector<char>& was_tree, const std::vector<char>& tracked) const {
    std::vector<char> now_tree(g_.edge_count(), 0);
    for (EdgeId e : lower_limit_tree(g_)) now_tree[e] = 1;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (!tracked[e]) continue;
      EdgeStatus s = g_.status(e);
      bool in_tree = s == EdgeStatus::Contracted || (s == EdgeStatus::Present && now_tree[e]);
      if (in_tree != static_cast<bool>(was_tree[e])) return true;
    }
    return false;
  }

  void repair() {
    for (;;) {
      ++ledger_.rebuilds;
      Matching retained;
      VertexCoverInstance next = build_vc_instance(g_, &matching_);
      for (const auto& [a, b] : matching_) {
        if (next.edges.count({a, b})) {
          retained[a] = b;
          retained[b] = a;
        }
      }
      for (const auto& [a, b] : retained) {
        if (ledger_.deferred.count(a)) ++ledger_.retained_conflicts;
      }
      matching_ = next.matching;
      cover_ = next.cover;
      record(next);

      std::set<EdgeId> repair_set;
      for (const auto& [a, b] : matching_) {
        if (ledger_.deferred.count(a) || ledger_.deferred.count(b)) {
          repair_set.insert(a);
          repair_set.insert(b);
        }
      }
      bool any = false;
      for (EdgeId r : repair_set) {
        if (!g_.present(r) || g_.is_trivial(r)) continue;
        g_.reveal(r);
        ledger_.repair_queries.push_back(r);
        any = true;
      }
      if (!any) return;
      make_unique_with_partners();
    }
  }

  WorkingGraph& g_;
  Phase2Ledger ledger_;
  Matching matching_;
  std::vector<EdgeId> cover_;
  VertexCoverInstance current_;
  std::vector<EdgeId> side_queries_;
};

}  // namespace

Phase2Ledger phase2_error_sensitive(WorkingGraph& g) { return ErrorSensitive(g).run(); }

}  // namespace mstu
