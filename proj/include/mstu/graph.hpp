#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mstu/rational.hpp"

namespace mstu {

using EdgeId = std::size_t;
using VertexId = std::size_t;

class Interval {
 public:
  static Interval open(Rational lower, Rational upper);
  static Interval trivial(Rational value);

  bool is_trivial() const { return trivial_; }
  // For a trivial interval both limits equal the value.
  const Rational& lower() const { return lower_; }
  const Rational& upper() const { return upper_; }
  const Rational& value() const;

  // Strict containment for open intervals, equality for trivial ones.
  bool contains(const Rational& v) const;
  bool intersects(const Interval& other) const;

  bool operator==(const Interval& other) const = default;

 private:
  Interval(Rational lower, Rational upper, bool trivial)
      : lower_(lower), upper_(upper), trivial_(trivial) {}

  Rational lower_;
  Rational upper_;
  bool trivial_ = true;
};

std::string to_string(const Interval& interval);

struct UncertainEdge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  Interval interval = Interval::trivial(Rational(0));
  Rational truth;
  Rational prediction;
  std::string label;
};

// Connected multigraph with uncertainty intervals. Immutable after construction.
class UncertainGraph {
 public:
  UncertainGraph(std::size_t vertex_count, std::vector<UncertainEdge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const UncertainEdge& edge(EdgeId id) const;
  const std::vector<UncertainEdge>& edges() const { return edges_; }

  // Edge whose label (or decimal id) is `name`.
  std::optional<EdgeId> find(const std::string& name) const;
  std::string name(EdgeId id) const;

  std::size_t nontrivial_count() const;
  std::vector<Rational> truths() const;
  std::vector<Rational> predictions() const;

  // Copy with the given predicted values. Values must be inside the intervals.
  UncertainGraph with_predictions(const std::vector<Rational>& predictions) const;
  UncertainGraph with_truths(const std::vector<Rational>& truths) const;

 private:
  void validate() const;

  std::size_t vertex_count_ = 0;
  std::vector<UncertainEdge> edges_;
};

}  // namespace mstu
