#include <algorithm>

#include "mstu/errors.hpp"
#include "mstu/limit_trees.hpp"
#include "mstu/strategies.hpp"

namespace mstu {

namespace {

// Edge with the largest upper limit, smallest id on ties.
EdgeId highest_upper(const WorkingGraph& g, const std::vector<EdgeId>& edges) {
  EdgeId best = edges.front();
  for (EdgeId e : edges) {
    if (g.upper(best) < g.upper(e)) best = e;
  }
  return best;
}

// Edge with the smallest lower limit, smallest id on ties.
EdgeId lowest_lower(const WorkingGraph& g, const std::vector<EdgeId>& edges) {
  EdgeId best = edges.front();
  for (EdgeId e : edges) {
    if (g.lower(e) < g.lower(best)) best = e;
  }
  return best;
}

std::vector<EdgeId> without(std::vector<EdgeId> edges, std::initializer_list<EdgeId> drop) {
  edges.erase(std::remove_if(edges.begin(), edges.end(),
                             [&](EdgeId e) { return std::find(drop.begin(), drop.end(), e) != drop.end(); }),
              edges.end());
  return edges;
}

class Preprocessor {
 public:
  Preprocessor(WorkingGraph& g, std::int64_t gamma) : g_(g), gamma_(gamma) {}

  PreprocessLedger run() {
    std::size_t cap = g_.edge_count() * g_.edge_count() + 2;
    for (;; ++ledger_.iterations) {
      if (ledger_.iterations > cap) throw std::logic_error("preprocessing exceeded its restart cap");
      iteration_.clear();
      make_unique();
      for (std::int64_t count = 0; count < gamma_ - 2; ++count) {
        std::vector<EdgeId> mandatory = prediction_mandatory_edges(g_);
        if (mandatory.empty()) break;
        query(mandatory.front());
        ledger_.prediction_mandatory.push_back(mandatory.front());
        make_unique();
      }
      if (!scan_cycles()) break;
      g_.transcript().restart("preprocess");
    }
    ledger_.last_iteration = iteration_;
    return ledger_;
  }

 private:
  Rational query(EdgeId e) {
    Rational w = g_.reveal(e);
    ledger_.queries.push_back(e);
    iteration_.push_back(e);
    return w;
  }

  void make_unique() {
    for (EdgeId e : ensure_unique_limit_trees(g_, true)) {
      ledger_.queries.push_back(e);
      ledger_.uniqueness_queries.push_back(e);
      iteration_.push_back(e);
    }
  }

  bool cycle_prediction_free(EdgeId f, const std::vector<EdgeId>& rest) const {
    return std::all_of(rest.begin(), rest.end(), [&](EdgeId e) {
      return g_.prediction(f) >= g_.upper(e) && g_.prediction(e) <= g_.lower(f);
    });
  }

  // Handles the first cycle that is not prediction mandatory free. Returns
  // false when there is none.
  bool scan_cycles() {
    LimitTrees lt = compute_limit_trees(g_);
    for (EdgeId f : lt.non_tree_order) {
      std::vector<EdgeId> rest = without(lt.cycles.at(f), {f});
      if (rest.empty() || cycle_prediction_free(f, rest)) continue;
      handle(lt, f, rest);
      return true;
    }
    return false;
  }

  void handle(const LimitTrees& lt, EdgeId f, const std::vector<EdgeId>& rest) {
    const Interval If = g_.interval(f);
    EdgeId l = highest_upper(g_, rest);
    const Interval Il = g_.interval(l);
    CaseRecord rec;
    rec.f = f;

    if (Il.contains(g_.prediction(f)) && If.contains(g_.prediction(l))) {
      rec.kind = 'b';
      rec.l = l;
      query(f);
      query(l);
      rec.queried = {f, l};
    } else if (Il.contains(g_.prediction(f))) {
      rec.kind = 'c';
      rec.l = l;
      std::vector<EdgeId> others = without(rest, {l});
      bool overlap = std::any_of(others.begin(), others.end(), [&](EdgeId e) { return g_.interval(e).intersects(If); });
      if (overlap) {
        EdgeId third = highest_upper(g_, others);
        rec.third = third;
        std::vector<Interval> cut_intervals;
        for (EdgeId fj : lt.cuts.at(l)) {
          if (fj != l) cut_intervals.push_back(g_.interval(fj));
        }
        Rational wf = query(f);
        Rational wl = query(l);
        rec.queried = {f, l};
        bool l_minimal = std::none_of(cut_intervals.begin(), cut_intervals.end(),
                                      [&](const Interval& iv) { return iv.contains(wl); });
        if (Il.contains(wf) && l_minimal) {
          query(third);
          rec.queried.push_back(third);
        }
      } else {
        rec.two_step = true;
        Rational wl = query(l);
        rec.queried = {l};
        if (If.contains(wl)) {
          query(f);
          rec.queried.push_back(f);
        } else {
          rec.spared = f;
        }
      }
    } else {
      rec.kind = 'd';
      std::vector<EdgeId> predicted_inside;
      for (EdgeId e : rest) {
        if (If.contains(g_.prediction(e))) predicted_inside.push_back(e);
      }
      if (predicted_inside.empty()) throw std::logic_error("cycle violates the prediction condition in no known way");
      EdgeId l2 = highest_upper(g_, predicted_inside);
      rec.l = l2;
      const Interval Il2 = g_.interval(l2);
      std::vector<EdgeId> cut = without(lt.cuts.at(l2), {f, l2});
      bool overlap = std::any_of(cut.begin(), cut.end(), [&](EdgeId e) { return g_.interval(e).intersects(Il2); });
      if (overlap) {
        EdgeId fj = lowest_lower(g_, cut);
        rec.third = fj;
        std::vector<Interval> cycle_intervals;
        for (EdgeId e : rest) cycle_intervals.push_back(g_.interval(e));
        Rational wf = query(f);
        Rational wl = query(l2);
        rec.queried = {f, l2};
        bool f_maximal = std::none_of(cycle_intervals.begin(), cycle_intervals.end(),
                                      [&](const Interval& iv) { return iv.contains(wf); });
        if (If.contains(wl) && f_maximal) {
          query(fj);
          rec.queried.push_back(fj);
        }
      } else {
        rec.two_step = true;
        Rational wf = query(f);
        rec.queried = {f};
        if (Il2.contains(wf)) {
          query(l2);
          rec.queried.push_back(l2);
        } else {
          rec.spared = l2;
        }
      }
    }
    if (rec.spared) ledger_.spared.push_back(*rec.spared);
    ledger_.cases.push_back(rec);
  }

  WorkingGraph& g_;
  std::int64_t gamma_;
  PreprocessLedger ledger_;
  std::vector<EdgeId> iteration_;
};

}  // namespace

PreprocessLedger make_prediction_mandatory_free(WorkingGraph& g, std::int64_t gamma) {
  if (gamma < 2) throw InvalidParams("gamma must be at least 2");
  return Preprocessor(g, gamma).run();
}

}  // namespace mstu
