#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "mstu/working_graph.hpp"

namespace mstu {

enum class Relation { LeftOf, Inside, RightOf };

// Relation of v to the open interval (L,U): v <= L, L < v < U, or v >= U.
Relation relation(const Rational& v, const Interval& interval);

// k_{other}(e): 1 iff the predicted value of e and its true value relate
// differently to the interval of `other`. Trivial `other` contributes 0.
int hop_indicator(const UncertainGraph& g, EdgeId e, EdgeId other);

// Hop error of edge e for an arbitrary (value, prediction) pair against the
// intervals of all other edges of g.
std::size_t edge_hop_loss(const UncertainGraph& g, EdgeId e, const Rational& value, const Rational& prediction);

struct ErrorReport {
  std::vector<std::size_t> jo;
  std::vector<std::size_t> oj;
  std::size_t k_h = 0;
  std::size_t k_wrong = 0;

  std::size_t jo_of(const std::vector<EdgeId>& set) const;
  std::size_t oj_of(const std::vector<EdgeId>& set) const;
  nlohmann::json to_json() const;
};

// Always measured on the instance as given (intervals before any query).
ErrorReport hop_distance(const UncertainGraph& g);

// Number of present, currently non-trivial edges other than e whose interval
// relates differently to `value` than to the prediction of e.
std::size_t observed_relation_errors(const WorkingGraph& g, EdgeId e, const Rational& value);

}  // namespace mstu
