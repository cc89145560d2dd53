#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "mstu/graph.hpp"

namespace mstu {

UncertainGraph instance_from_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const UncertainGraph& graph);

UncertainGraph parse_instance(const std::string& text);
UncertainGraph load_instance(const std::filesystem::path& path);

// Canonical serialization: fixed key order, rationals as "p" or "p/q".
std::string save_instance(const UncertainGraph& graph);
void save_instance(const UncertainGraph& graph, const std::filesystem::path& path);

// Accepts a JSON string ("p/q", "p", decimal) or a JSON integer.
Rational rational_from_json(const nlohmann::json& value);

}  // namespace mstu
