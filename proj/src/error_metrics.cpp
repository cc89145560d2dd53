#include "mstu/error_metrics.hpp"

#include <numeric>

namespace mstu {

Relation relation(const Rational& v, const Interval& interval) {
  if (v <= interval.lower()) return Relation::LeftOf;
  if (v >= interval.upper()) return Relation::RightOf;
  return Relation::Inside;
}

int hop_indicator(const UncertainGraph& g, EdgeId e, EdgeId other) {
  const UncertainEdge& a = g.edge(e);
  const Interval& iv = g.edge(other).interval;
  if (e == other || iv.is_trivial()) return 0;
  return relation(a.prediction, iv) != relation(a.truth, iv) ? 1 : 0;
}

std::size_t edge_hop_loss(const UncertainGraph& g, EdgeId e, const Rational& value, const Rational& prediction) {
  std::size_t loss = 0;
  for (const UncertainEdge& other : g.edges()) {
    if (other.id == e || other.interval.is_trivial()) continue;
    if (relation(value, other.interval) != relation(prediction, other.interval)) ++loss;
  }
  return loss;
}

ErrorReport hop_distance(const UncertainGraph& g) {
  std::size_t m = g.edge_count();
  ErrorReport r;
  r.jo.assign(m, 0);
  r.oj.assign(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    for (EdgeId other = 0; other < m; ++other) {
      int k = hop_indicator(g, e, other);
      r.jo[e] += k;
      r.oj[other] += k;
    }
    if (g.edge(e).prediction != g.edge(e).truth) ++r.k_wrong;
  }
  r.k_h = std::accumulate(r.jo.begin(), r.jo.end(), std::size_t{0});
  return r;
}

std::size_t ErrorReport::jo_of(const std::vector<EdgeId>& set) const {
  std::size_t total = 0;
  for (EdgeId e : set) total += jo.at(e);
  return total;
}

std::size_t ErrorReport::oj_of(const std::vector<EdgeId>& set) const {
  std::size_t total = 0;
  for (EdgeId e : set) total += oj.at(e);
  return total;
}

nlohmann::json ErrorReport::to_json() const {
  return {{"jo", jo}, {"oj", oj}, {"k_h", k_h}, {"k_wrong", k_wrong}};
}

std::size_t observed_relation_errors(const WorkingGraph& g, EdgeId e, const Rational& value) {
  std::size_t errors = 0;
  for (EdgeId other : g.present_edges()) {
    if (other == e || g.is_trivial(other)) continue;
    const Interval& iv = g.interval(other);
    if (relation(value, iv) != relation(g.prediction(e), iv)) ++errors;
  }
  return errors;
}

}  // namespace mstu
