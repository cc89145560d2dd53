#include "mstu/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "mstu/errors.hpp"

namespace mstu {

using nlohmann::json;

Rational rational_from_json(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  throw ParseError("expected a rational as \"p/q\" string or integer, got " + value.dump());
}

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::size_t as_index(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw ParseError(where + ": expected a non-negative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

UncertainGraph instance_from_json(const json& doc) {
  std::size_t n = as_index(require(doc, "vertices", "instance"), "vertices");
  const json& list = require(doc, "edges", "instance");
  if (!list.is_array()) throw ParseError("instance: \"edges\" must be an array");

  std::vector<UncertainEdge> edges;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& item = list[i];
    std::string where = "edges[" + std::to_string(i) + "]";
    UncertainEdge e;
    e.id = as_index(require(item, "id", where), where + ".id");
    where = "edge " + std::to_string(e.id);
    e.u = as_index(require(item, "u", where), where + ".u");
    e.v = as_index(require(item, "v", where), where + ".v");
    const json& iv = require(item, "interval", where);
    if (iv.contains("w")) {
      e.interval = Interval::trivial(rational_from_json(iv.at("w")));
    } else {
      Rational lo = rational_from_json(require(iv, "L", where));
      Rational hi = rational_from_json(require(iv, "U", where));
      if (!(lo < hi)) throw ValidationError(where + ": open interval requires L < U");
      e.interval = Interval::open(lo, hi);
    }
    if (e.interval.is_trivial()) {
      e.truth = item.contains("true") ? rational_from_json(item.at("true")) : e.interval.value();
      e.prediction = item.contains("pred") ? rational_from_json(item.at("pred")) : e.interval.value();
    } else {
      e.truth = rational_from_json(require(item, "true", where));
      e.prediction = rational_from_json(require(item, "pred", where));
    }
    if (item.contains("label")) e.label = item.at("label").get<std::string>();
    edges.push_back(std::move(e));
  }
  return UncertainGraph(n, std::move(edges));
}

json instance_to_json(const UncertainGraph& graph) {
  json edges = json::array();
  for (const UncertainEdge& e : graph.edges()) {
    json item = json::object();
    item["id"] = e.id;
    item["u"] = e.u;
    item["v"] = e.v;
    if (e.interval.is_trivial()) {
      item["interval"] = {{"w", to_string(e.interval.value())}};
    } else {
      item["interval"] = {{"L", to_string(e.interval.lower())}, {"U", to_string(e.interval.upper())}};
    }
    item["true"] = to_string(e.truth);
    item["pred"] = to_string(e.prediction);
    if (!e.label.empty()) item["label"] = e.label;
    edges.push_back(std::move(item));
  }
  return {{"vertices", graph.vertex_count()}, {"edges", std::move(edges)}};
}

UncertainGraph parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  try {
    return instance_from_json(doc);
  } catch (const json::exception& err) {
    throw ParseError(std::string("malformed instance: ") + err.what());
  }
}

UncertainGraph load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string save_instance(const UncertainGraph& graph) { return instance_to_json(graph).dump(2) + "\n"; }

void save_instance(const UncertainGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << save_instance(graph);
}

}  // namespace mstu
