#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mstu/graph.hpp"

namespace mstu {

enum class EventKind { Reveal, Contract, Delete, Restart, PhaseSwitch };

std::string to_string(EventKind kind);

struct TranscriptEvent {
  std::size_t seq = 0;
  EventKind kind = EventKind::Reveal;
  std::optional<EdgeId> edge;
  std::optional<Rational> value;
  std::string tag;
};

class QueryTranscript {
 public:
  void reveal(EdgeId e, const Rational& value);
  void contract(EdgeId e);
  void remove(EdgeId e);
  void restart(std::string tag);
  void phase_switch(std::string tag);

  const std::vector<TranscriptEvent>& events() const { return events_; }
  std::vector<EdgeId> revealed() const;

  void set_final_tree(std::vector<EdgeId> tree) { final_tree_ = std::move(tree); }
  const std::optional<std::vector<EdgeId>>& final_tree() const { return final_tree_; }

  nlohmann::json to_json() const;

 private:
  void push(TranscriptEvent event);

  std::vector<TranscriptEvent> events_;
  std::optional<std::vector<EdgeId>> final_tree_;
};

}  // namespace mstu
