#include "mstu/graph.hpp"

#include <algorithm>
#include <numeric>

#include "mstu/errors.hpp"

namespace mstu {

Interval Interval::open(Rational lower, Rational upper) {
  if (!(lower < upper)) {
    throw ValidationError("open interval requires L < U, got (" + to_string(lower) + ", " +
                          to_string(upper) + ")");
  }
  return Interval(lower, upper, false);
}

Interval Interval::trivial(Rational value) { return Interval(value, value, true); }

const Rational& Interval::value() const {
  if (!trivial_) throw std::logic_error("value() on an open interval");
  return lower_;
}

bool Interval::contains(const Rational& v) const {
  if (trivial_) return v == lower_;
  return lower_ < v && v < upper_;
}

bool Interval::intersects(const Interval& other) const {
  if (trivial_ && other.trivial_) return lower_ == other.lower_;
  if (trivial_) return other.contains(lower_);
  if (other.trivial_) return contains(other.lower_);
  return std::max(lower_, other.lower_) < std::min(upper_, other.upper_);
}

std::string to_string(const Interval& interval) {
  if (interval.is_trivial()) return "{" + to_string(interval.lower()) + "}";
  return "(" + to_string(interval.lower()) + ", " + to_string(interval.upper()) + ")";
}

UncertainGraph::UncertainGraph(std::size_t vertex_count, std::vector<UncertainEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(),
            [](const UncertainEdge& a, const UncertainEdge& b) { return a.id < b.id; });
  validate();
}

void UncertainGraph::validate() const {
  if (vertex_count_ == 0) throw ValidationError("graph has no vertices");
  std::vector<std::size_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertex_count_;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const UncertainEdge& e = edges_[i];
    std::string where = "edge " + std::to_string(e.id);
    if (e.id != i) throw ValidationError("edge ids must be 0..m-1 without gaps; missing id " + std::to_string(i));
    if (e.u >= vertex_count_ || e.v >= vertex_count_) throw ValidationError(where + ": endpoint out of range");
    if (e.u == e.v) throw ValidationError(where + ": self-loop");
    if (e.interval.is_trivial()) {
      if (e.truth != e.interval.value()) throw ValidationError(where + ": trivial edge needs true value = w");
      if (e.prediction != e.interval.value()) throw ValidationError(where + ": trivial edge needs predicted value = w");
    } else {
      if (!e.interval.contains(e.truth)) throw ValidationError(where + ": true value outside the open interval");
      if (!e.interval.contains(e.prediction)) throw ValidationError(where + ": predicted value outside the open interval");
    }
    std::size_t a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) throw ValidationError("graph is not connected");
}

const UncertainEdge& UncertainGraph::edge(EdgeId id) const {
  if (id >= edges_.size()) throw UnknownEdge("unknown edge " + std::to_string(id));
  return edges_[id];
}

std::optional<EdgeId> UncertainGraph::find(const std::string& name) const {
  for (const UncertainEdge& e : edges_) {
    if (e.label == name) return e.id;
  }
  for (const UncertainEdge& e : edges_) {
    if (std::to_string(e.id) == name) return e.id;
  }
  return std::nullopt;
}

std::string UncertainGraph::name(EdgeId id) const {
  const UncertainEdge& e = edge(id);
  return e.label.empty() ? std::to_string(id) : e.label;
}

std::size_t UncertainGraph::nontrivial_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const UncertainEdge& e) {
    return !e.interval.is_trivial();
  }));
}

std::vector<Rational> UncertainGraph::truths() const {
  std::vector<Rational> out;
  for (const UncertainEdge& e : edges_) out.push_back(e.truth);
  return out;
}

std::vector<Rational> UncertainGraph::predictions() const {
  std::vector<Rational> out;
  for (const UncertainEdge& e : edges_) out.push_back(e.prediction);
  return out;
}

UncertainGraph UncertainGraph::with_predictions(const std::vector<Rational>& predictions) const {
  if (predictions.size() != edges_.size()) throw ValidationError("prediction vector has wrong length");
  std::vector<UncertainEdge> edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].prediction = predictions[i];
  return UncertainGraph(vertex_count_, std::move(edges));
}

UncertainGraph UncertainGraph::with_truths(const std::vector<Rational>& truths) const {
  if (truths.size() != edges_.size()) throw ValidationError("truth vector has wrong length");
  std::vector<UncertainEdge> edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].truth = truths[i];
  return UncertainGraph(vertex_count_, std::move(edges));
}

}  // namespace mstu
