#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "mstu/graph.hpp"
#include "mstu/transcript.hpp"

namespace mstu {

enum class ValueSource { Truth, Predictions };

enum class EdgeStatus { Present, Contracted, Deleted };

// Mutable query state over an UncertainGraph. Strategies only ever see this
// view: the hidden value of an edge is available solely through reveal().
class WorkingGraph {
 public:
  WorkingGraph(const UncertainGraph& graph, ValueSource source);

  // Copy of this state where every unrevealed edge would reveal its predicted value.
  WorkingGraph assuming_predictions() const;

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool present(EdgeId e) const { return check(e).status == EdgeStatus::Present; }
  EdgeStatus status(EdgeId e) const { return check(e).status; }
  std::vector<EdgeId> present_edges() const;
  std::size_t present_count() const;

  // Endpoints after contractions, as representative vertices.
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  VertexId representative(VertexId v) const;

  bool is_trivial(EdgeId e) const { return check(e).current.is_trivial(); }
  bool revealed(EdgeId e) const { return check(e).revealed; }
  const Interval& interval(EdgeId e) const { return check(e).current; }
  const Interval& original_interval(EdgeId e) const { return check(e).original; }
  // Limits of the current interval; both equal w for a trivial edge.
  const Rational& lower(EdgeId e) const { return check(e).current.lower(); }
  const Rational& upper(EdgeId e) const { return check(e).current.upper(); }
  const Rational& prediction(EdgeId e) const { return check(e).prediction; }
  std::optional<Rational> known_value(EdgeId e) const;

  Rational reveal(EdgeId e);
  // Contracting may turn parallel edges into loops; those are deleted.
  void contract(EdgeId e);
  // Refuses to disconnect the graph.
  void remove(EdgeId e);

  std::size_t query_count() const { return query_count_; }
  const QueryTranscript& transcript() const { return transcript_; }
  QueryTranscript& transcript() { return transcript_; }

  // Non-trivial edges removed by contract/remove without ever being queried.
  const std::vector<EdgeId>& unqueried_removed() const { return unqueried_removed_; }
  std::vector<EdgeId> contracted_edges() const;

 private:
  struct EdgeState {
    VertexId u = 0;
    VertexId v = 0;
    Interval original = Interval::trivial(Rational(0));
    Interval current = Interval::trivial(Rational(0));
    Rational prediction;
    Rational hidden;
    bool revealed = false;
    EdgeStatus status = EdgeStatus::Present;
  };

  const EdgeState& check(EdgeId e) const;
  EdgeState& check(EdgeId e);
  VertexId find(VertexId v) const;
  void drop(EdgeId e, EdgeStatus status);
  bool connected_without(EdgeId e) const;

  std::size_t vertex_count_ = 0;
  std::vector<EdgeState> edges_;
  mutable std::vector<VertexId> parent_;
  std::size_t query_count_ = 0;
  QueryTranscript transcript_;
  std::vector<EdgeId> unqueried_removed_;
};

// Standalone instance made of the edges still present in `state`, with the
// hidden values taken from `original`. Vertices are renumbered densely; edge
// ids keep their relative order.
UncertainGraph residual_instance(const UncertainGraph& original, const WorkingGraph& state);

}  // namespace mstu
