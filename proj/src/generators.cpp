#include "mstu/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mstu/error_metrics.hpp"
#include "mstu/errors.hpp"
#include "mstu/learner.hpp"

namespace mstu {

namespace {

Rational r(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

UncertainEdge open_edge(EdgeId id, VertexId u, VertexId v, Rational lo, Rational hi, Rational pred, Rational truth,
                        std::string label) {
  UncertainEdge e;
  e.id = id;
  e.u = u;
  e.v = v;
  e.interval = Interval::open(lo, hi);
  e.prediction = pred;
  e.truth = truth;
  e.label = std::move(label);
  return e;
}

UncertainEdge trivial_edge(EdgeId id, VertexId u, VertexId v, Rational w, std::string label) {
  UncertainEdge e;
  e.id = id;
  e.u = u;
  e.v = v;
  e.interval = Interval::trivial(w);
  e.prediction = w;
  e.truth = w;
  e.label = std::move(label);
  return e;
}

}  // namespace

UncertainGraph gen_tradeoff_cycle(std::int64_t beta, bool adversarial) {
  if (beta < 2) throw InvalidParams("tradeoff cycle needs beta >= 2");
  std::size_t n = static_cast<std::size_t>(beta) + 1;
  std::vector<UncertainEdge> edges;
  Rational w0 = adversarial ? r(7, 2) : r(5, 2);
  edges.push_back(open_edge(0, 0, 1, r(2), r(4), r(5, 2), w0, "e0"));
  for (std::size_t i = 1; i < n; ++i) {
    bool last = static_cast<std::int64_t>(i) == beta;
    Rational w = adversarial && last ? r(5, 2) : r(3, 2);
    edges.push_back(open_edge(i, i, (i + 1) % n, r(1), r(3), r(3, 2), w, "e" + std::to_string(i)));
  }
  return UncertainGraph(n, std::move(edges));
}

UncertainGraph gen_path_parallel(std::int64_t n) {
  if (n < 1) throw InvalidParams("path-parallel needs n >= 1");
  std::size_t k = static_cast<std::size_t>(n);
  std::vector<UncertainEdge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    Rational w = i + 1 == k ? r(3, 2) : r(1, 2);
    edges.push_back(open_edge(i, i, i + 1, r(0), r(2), r(1, 2), w, "p" + std::to_string(i + 1)));
  }
  for (std::size_t i = 0; i < k; ++i) {
    edges.push_back(open_edge(k + i, 0, k, r(1), r(3), r(5, 2), r(5, 2), "q" + std::to_string(i + 1)));
  }
  return UncertainGraph(k + 1, std::move(edges));
}

UncertainGraph gen_triangle_chain(std::int64_t n, bool truths_match) {
  if (n < 1) throw InvalidParams("triangle chain needs n >= 1");
  std::vector<UncertainEdge> edges;
  for (std::int64_t i = 0; i < n; ++i) {
    VertexId a = 3 * i, b = a + 1, c = a + 2;
    Rational shift = r(10 * i);
    std::string suffix = n == 1 ? "" : "_" + std::to_string(i + 1);
    Rational w1 = truths_match ? r(1, 2) : r(3, 2);
    edges.push_back(open_edge(edges.size(), a, b, shift, shift + r(2), shift + r(1, 2), shift + w1, "e1" + suffix));
    edges.push_back(open_edge(edges.size(), b, c, shift + r(1), shift + r(3), shift + r(5, 2), shift + r(5, 2),
                              "e2" + suffix));
    edges.push_back(open_edge(edges.size(), c, a, shift - r(3), shift - r(2), shift - r(5, 2), shift - r(5, 2),
                              "e3" + suffix));
  }
  for (std::int64_t i = 0; i + 1 < n; ++i) {
    edges.push_back(trivial_edge(edges.size(), 3 * i, 3 * (i + 1), r(-100), "link" + std::to_string(i + 1)));
  }
  return UncertainGraph(static_cast<std::size_t>(3 * n), std::move(edges));
}

UncertainGraph gen_vc_flip(std::int64_t n, FlipVariant variant) {
  if (n < 4 || n % 2 != 0) throw InvalidParams("vc-flip needs an even n >= 4");
  std::int64_t k = n / 2;
  Rational t(1, 2 * k);
  std::vector<UncertainEdge> edges;
  // Tree side: l_1 is mispredicted low, the rest sit below every f.
  edges.push_back(open_edge(0, 0, 1, r(-6), r(-5, 2), r(-23, 4), r(-11, 4), "l1"));
  for (std::int64_t j = 2; j <= k; ++j) {
    Rational lo = r(-13, 2) - t * r(j - 2);
    Rational hi = r(-3) - t * r(j - 2);
    edges.push_back(open_edge(edges.size(), j - 1, j, lo, hi, lo + r(1, 2), lo + r(1, 2), "l" + std::to_string(j)));
  }
  // Non-tree side: f_1 is mispredicted high, the rest sit above every l.
  for (std::int64_t j = 1; j <= k; ++j) {
    Rational lo = r(-5) + t * r(j - 1);
    Rational hi = r(-3, 2) + t * r(j - 1);
    Rational pred = hi - r(1, 4);
    Rational truth = j == 1 ? r(-5) + t / r(2) : pred;
    VertexId u = 0;
    VertexId v = (variant == FlipVariant::AllSpanning || j == 1) ? static_cast<VertexId>(k) : 1;
    edges.push_back(open_edge(edges.size(), u, v, lo, hi, pred, truth, "f" + std::to_string(j)));
  }
  return UncertainGraph(static_cast<std::size_t>(k + 1), std::move(edges));
}

RandomParams random_params_from_json(const nlohmann::json& doc) {
  RandomParams p;
  if (!doc.is_object()) throw InvalidParams("random parameters must be an object");
  if (doc.contains("vertices")) p.vertices = doc.at("vertices").get<std::size_t>();
  if (doc.contains("extra_edges")) p.extra_edges = doc.at("extra_edges").get<std::size_t>();
  if (doc.contains("overlap_density")) p.overlap_density = doc.at("overlap_density").get<double>();
  if (doc.contains("error_rate")) p.error_rate = doc.at("error_rate").get<double>();
  if (doc.contains("trivial_rate")) p.trivial_rate = doc.at("trivial_rate").get<double>();
  if (doc.contains("seed")) p.seed = doc.at("seed").get<std::uint64_t>();
  return p;
}

UncertainGraph gen_random(const RandomParams& p) {
  auto probability = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (p.vertices < 2) throw InvalidParams("random instance needs at least 2 vertices");
  if (!probability(p.overlap_density) || !probability(p.error_rate) || !probability(p.trivial_rate)) {
    throw InvalidParams("densities and rates must lie in [0,1]");
  }
  std::mt19937_64 rng(p.seed);
  auto below = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto chance = [&](double prob) { return std::bernoulli_distribution(prob)(rng); };

  std::vector<std::pair<VertexId, VertexId>> ends;
  for (VertexId v = 1; v < p.vertices; ++v) ends.push_back({below(v), v});
  for (std::size_t i = 0; i < p.extra_edges; ++i) {
    VertexId a = below(p.vertices);
    VertexId b = below(p.vertices - 1);
    if (b >= a) ++b;
    ends.push_back({a, b});
  }
  std::shuffle(ends.begin(), ends.end(), rng);
  std::size_t m = ends.size();
  // Integer limits in [0, 4m); lengths grow with the overlap density.
  std::int64_t range = 4 * static_cast<std::int64_t>(m);
  std::int64_t max_len = 1 + static_cast<std::int64_t>(p.overlap_density * static_cast<double>(range));
  // Distinct starts: with unit lengths (density 0) no two intervals overlap.
  std::vector<std::int64_t> starts(static_cast<std::size_t>(range));
  std::iota(starts.begin(), starts.end(), 0);
  std::shuffle(starts.begin(), starts.end(), rng);

  std::vector<UncertainEdge> edges;
  for (EdgeId id = 0; id < m; ++id) {
    auto [u, v] = ends[id];
    std::int64_t lo = starts[id];
    if (chance(p.trivial_rate)) {
      edges.push_back(trivial_edge(id, u, v, r(lo), ""));
      continue;
    }
    std::int64_t hi = lo + 1 + static_cast<std::int64_t>(below(static_cast<std::size_t>(max_len)));
    Rational truth = r(lo) + r(hi - lo) * r(static_cast<std::int64_t>(1 + below(15)), 16);
    edges.push_back(open_edge(id, u, v, r(lo), r(hi), truth, truth, ""));
  }
  UncertainGraph exact(p.vertices, edges);

  CandidateGrid grid = discretize(exact);
  std::vector<Rational> preds = exact.predictions();
  for (EdgeId id = 0; id < m; ++id) {
    if (edges[id].interval.is_trivial() || !chance(p.error_rate)) continue;
    std::vector<Rational> wrong;
    for (const Rational& c : grid.candidates[id]) {
      if (edge_hop_loss(exact, id, edges[id].truth, c) > 0) wrong.push_back(c);
    }
    if (!wrong.empty()) preds[id] = wrong[below(wrong.size())];
  }
  return exact.with_predictions(preds);
}

UncertainGraph generate(const std::string& family, const nlohmann::json& params) {
  auto get_int = [&](const char* key, std::int64_t fallback) {
    return params.contains(key) ? params.at(key).get<std::int64_t>() : fallback;
  };
  auto get_bool = [&](const char* key) { return params.contains(key) && params.at(key).get<bool>(); };
  if (family == "tradeoff-cycle") return gen_tradeoff_cycle(get_int("beta", 2), get_bool("adversarial"));
  if (family == "path-parallel") return gen_path_parallel(get_int("n", 1));
  if (family == "triangle-chain") return gen_triangle_chain(get_int("n", 1), get_bool("truths_match"));
  if (family == "vc-flip") {
    std::string variant = params.contains("variant") ? params.at("variant").get<std::string>() : "ex1";
    if (variant != "ex1" && variant != "ex2") throw InvalidParams("vc-flip variant must be ex1 or ex2");
    return gen_vc_flip(get_int("n", 8), variant == "ex1" ? FlipVariant::AllSpanning : FlipVariant::OneSpanning);
  }
  if (family == "random") return gen_random(random_params_from_json(params.is_null() ? nlohmann::json::object() : params));
  throw InvalidParams("unknown family '" + family + "'");
}

}  // namespace mstu
