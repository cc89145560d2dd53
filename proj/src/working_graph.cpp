#include "mstu/working_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mstu/errors.hpp"

namespace mstu {

WorkingGraph::WorkingGraph(const UncertainGraph& graph, ValueSource source)
    : vertex_count_(graph.vertex_count()), parent_(graph.vertex_count()) {
  std::iota(parent_.begin(), parent_.end(), 0);
  edges_.reserve(graph.edge_count());
  for (const UncertainEdge& e : graph.edges()) {
    EdgeState s;
    s.u = e.u;
    s.v = e.v;
    s.original = e.interval;
    s.current = e.interval;
    s.prediction = e.prediction;
    s.hidden = source == ValueSource::Truth ? e.truth : e.prediction;
    edges_.push_back(s);
  }
}

WorkingGraph WorkingGraph::assuming_predictions() const {
  WorkingGraph copy = *this;
  for (EdgeState& s : copy.edges_) {
    if (!s.revealed) s.hidden = s.prediction;
  }
  return copy;
}

const WorkingGraph::EdgeState& WorkingGraph::check(EdgeId e) const {
  if (e >= edges_.size()) throw UnknownEdge("unknown edge " + std::to_string(e));
  return edges_[e];
}

WorkingGraph::EdgeState& WorkingGraph::check(EdgeId e) {
  if (e >= edges_.size()) throw UnknownEdge("unknown edge " + std::to_string(e));
  return edges_[e];
}

VertexId WorkingGraph::find(VertexId v) const {
  while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
  return v;
}

VertexId WorkingGraph::representative(VertexId v) const {
  if (v >= vertex_count_) throw std::out_of_range("vertex out of range");
  return find(v);
}

std::vector<EdgeId> WorkingGraph::present_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].status == EdgeStatus::Present) out.push_back(e);
  }
  return out;
}

std::size_t WorkingGraph::present_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const EdgeState& s) {
    return s.status == EdgeStatus::Present;
  }));
}

std::pair<VertexId, VertexId> WorkingGraph::endpoints(EdgeId e) const {
  const EdgeState& s = check(e);
  return {find(s.u), find(s.v)};
}

std::optional<Rational> WorkingGraph::known_value(EdgeId e) const {
  const EdgeState& s = check(e);
  if (s.current.is_trivial()) return s.current.value();
  return std::nullopt;
}

Rational WorkingGraph::reveal(EdgeId e) {
  EdgeState& s = check(e);
  if (s.status != EdgeStatus::Present) throw UnknownEdge("edge " + std::to_string(e) + " is no longer present");
  if (s.revealed || s.current.is_trivial()) throw AlreadyRevealed("edge " + std::to_string(e) + " already revealed");
  s.revealed = true;
  s.current = Interval::trivial(s.hidden);
  ++query_count_;
  transcript_.reveal(e, s.hidden);
  return s.hidden;
}

void WorkingGraph::drop(EdgeId e, EdgeStatus status) {
  EdgeState& s = check(e);
  s.status = status;
  if (!s.revealed && !s.original.is_trivial()) unqueried_removed_.push_back(e);
  if (status == EdgeStatus::Contracted) {
    transcript_.contract(e);
  } else {
    transcript_.remove(e);
  }
}

void WorkingGraph::contract(EdgeId e) {
  EdgeState& s = check(e);
  if (s.status != EdgeStatus::Present) throw UnknownEdge("edge " + std::to_string(e) + " is no longer present");
  VertexId a = find(s.u), b = find(s.v);
  if (a == b) throw PreconditionViolated("cannot contract a loop (edge " + std::to_string(e) + ")");
  parent_[std::max(a, b)] = std::min(a, b);
  drop(e, EdgeStatus::Contracted);
  for (EdgeId other = 0; other < edges_.size(); ++other) {
    if (edges_[other].status != EdgeStatus::Present) continue;
    auto [x, y] = endpoints(other);
    if (x == y) drop(other, EdgeStatus::Deleted);
  }
}

bool WorkingGraph::connected_without(EdgeId skip) const {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (e == skip || edges_[e].status != EdgeStatus::Present) continue;
    auto [a, b] = endpoints(e);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto [from, to] = endpoints(skip);
  if (from == to) return true;
  std::vector<VertexId> stack{from};
  std::map<VertexId, bool> seen{{from, true}};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (VertexId y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return false;
}

void WorkingGraph::remove(EdgeId e) {
  const EdgeState& s = check(e);
  if (s.status != EdgeStatus::Present) throw UnknownEdge("edge " + std::to_string(e) + " is no longer present");
  if (!connected_without(e)) {
    throw PreconditionViolated("deleting edge " + std::to_string(e) + " would disconnect the graph");
  }
  drop(e, EdgeStatus::Deleted);
}

std::vector<EdgeId> WorkingGraph::contracted_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].status == EdgeStatus::Contracted) out.push_back(e);
  }
  return out;
}

UncertainGraph residual_instance(const UncertainGraph& original, const WorkingGraph& state) {
  std::map<VertexId, VertexId> renumber;
  for (VertexId v = 0; v < state.vertex_count(); ++v) renumber.emplace(state.representative(v), 0);
  VertexId next = 0;
  for (auto& [rep, id] : renumber) id = next++;

  std::vector<UncertainEdge> edges;
  for (EdgeId e : state.present_edges()) {
    const UncertainEdge& src = original.edge(e);
    auto [a, b] = state.endpoints(e);
    UncertainEdge out;
    out.id = edges.size();
    out.u = renumber.at(a);
    out.v = renumber.at(b);
    out.interval = state.interval(e);
    out.label = original.name(e);
    if (out.interval.is_trivial()) {
      out.truth = out.interval.value();
      out.prediction = out.interval.value();
    } else {
      out.truth = src.truth;
      out.prediction = src.prediction;
    }
    edges.push_back(std::move(out));
  }
  return UncertainGraph(renumber.size(), std::move(edges));
}

}  // namespace mstu
