#include "mstu/transcript.hpp"

namespace mstu {

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Reveal: return "reveal";
    case EventKind::Contract: return "contract";
    case EventKind::Delete: return "delete";
    case EventKind::Restart: return "restart";
    case EventKind::PhaseSwitch: return "phase";
  }
  return "unknown";
}

void QueryTranscript::push(TranscriptEvent event) {
  event.seq = events_.size();
  events_.push_back(std::move(event));
}

void QueryTranscript::reveal(EdgeId e, const Rational& value) {
  push({0, EventKind::Reveal, e, value, {}});
}

void QueryTranscript::contract(EdgeId e) { push({0, EventKind::Contract, e, std::nullopt, {}}); }

void QueryTranscript::remove(EdgeId e) { push({0, EventKind::Delete, e, std::nullopt, {}}); }

void QueryTranscript::restart(std::string tag) {
  push({0, EventKind::Restart, std::nullopt, std::nullopt, std::move(tag)});
}

void QueryTranscript::phase_switch(std::string tag) {
  push({0, EventKind::PhaseSwitch, std::nullopt, std::nullopt, std::move(tag)});
}

std::vector<EdgeId> QueryTranscript::revealed() const {
  std::vector<EdgeId> out;
  for (const TranscriptEvent& ev : events_) {
    if (ev.kind == EventKind::Reveal) out.push_back(*ev.edge);
  }
  return out;
}

nlohmann::json QueryTranscript::to_json() const {
  nlohmann::json events = nlohmann::json::array();
  for (const TranscriptEvent& ev : events_) {
    nlohmann::json j = {{"seq", ev.seq}, {"event", to_string(ev.kind)}};
    if (ev.edge) j["edge"] = *ev.edge;
    if (ev.value) j["value"] = to_string(*ev.value);
    if (!ev.tag.empty()) j["tag"] = ev.tag;
    events.push_back(std::move(j));
  }
  nlohmann::json out = {{"events", std::move(events)}};
  out["final_tree"] = final_tree_ ? nlohmann::json(*final_tree_) : nlohmann::json(nullptr);
  return out;
}

}  // namespace mstu
