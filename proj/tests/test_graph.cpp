#include <gtest/gtest.h>

#include "mstu/errors.hpp"
#include "mstu/generators.hpp"
#include "mstu/instance_io.hpp"
#include "mstu/working_graph.hpp"
#include "support.hpp"

namespace mstu {
namespace {

using testing::fixture;
using testing::id_of;
using testing::q;

std::string one_edge_instance(const std::string& interval, const std::string& truth) {
  return R"({"vertices": 2, "edges": [{"id": 0, "u": 0, "v": 1, "interval": )" + interval + R"(, "true": ")" + truth +
         R"(", "pred": "1/2"}]})";
}

TEST(Instance, LoadsFigureFixture) {
  UncertainGraph g = fixture("fig2.json");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.name(0), "e1");
  EXPECT_EQ(g.edge(id_of(g, "e1")).interval, Interval::open(q(2), q(6)));
}

TEST(Instance, RejectsEmptyOpenInterval) {
  EXPECT_THROW(parse_instance(one_edge_instance(R"({"L": "1", "U": "1"})", "1")), ValidationError);
}

TEST(Instance, RejectsValueOnTheBoundary) {
  EXPECT_THROW(parse_instance(one_edge_instance(R"({"L": "0", "U": "1"})", "1")), ValidationError);
  EXPECT_NO_THROW(parse_instance(one_edge_instance(R"({"L": "0", "U": "1"})", "3/4")));
}

TEST(Instance, RejectsSelfLoopsAndDisconnectedGraphs) {
  const char* loop = R"({"vertices": 1, "edges": [{"id": 0, "u": 0, "v": 0, "interval": {"w": "1"}}]})";
  EXPECT_THROW(parse_instance(loop), ValidationError);
  const char* split = R"({"vertices": 3, "edges": [{"id": 0, "u": 0, "v": 1, "interval": {"w": "1"}}]})";
  EXPECT_THROW(parse_instance(split), ValidationError);
}

TEST(Instance, RejectsMalformedInput) {
  EXPECT_THROW(parse_instance("{"), ParseError);
  EXPECT_THROW(parse_instance(R"({"vertices": 2})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"vertices": 2, "edges": [{"id": 0, "u": 0, "v": 1}]})"), ParseError);
}

TEST(Instance, RejectsMismatchedTrivialValues) {
  const char* bad = R"({"vertices": 2, "edges": [{"id": 0, "u": 0, "v": 1, "interval": {"w": "1"}, "true": "2"}]})";
  EXPECT_THROW(parse_instance(bad), ValidationError);
}

TEST(Instance, RoundTripIsIdentityOnCanonicalForm) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    UncertainGraph g = gen_random(testing::small_params(seed, 0.5));
    std::string text = save_instance(g);
    EXPECT_EQ(save_instance(parse_instance(text)), text);
  }
  UncertainGraph fig = fixture("fig1.json");
  EXPECT_EQ(save_instance(parse_instance(save_instance(fig))), save_instance(fig));
}

TEST(WorkingGraph, RevealReturnsTheTrueValueOnce) {
  UncertainGraph g = fixture("fig2.json");
  WorkingGraph w(g, ValueSource::Truth);
  EdgeId e1 = id_of(g, "e1");
  EXPECT_EQ(w.reveal(e1), q(9, 2));
  EXPECT_TRUE(w.is_trivial(e1));
  EXPECT_EQ(w.query_count(), 1u);
  EXPECT_THROW(w.reveal(e1), AlreadyRevealed);
  EXPECT_THROW(w.reveal(99), UnknownEdge);

  WorkingGraph p(g, ValueSource::Predictions);
  EXPECT_EQ(p.reveal(e1), q(23, 4));
}

TEST(WorkingGraph, QueryCountMatchesRevealEvents) {
  UncertainGraph g = gen_random(testing::small_params(7, 0.3));
  WorkingGraph w(g, ValueSource::Truth);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!w.is_trivial(e)) w.reveal(e);
  }
  std::size_t reveals = 0;
  for (const auto& ev : w.transcript().events()) reveals += ev.kind == EventKind::Reveal;
  EXPECT_EQ(reveals, w.query_count());
  EXPECT_EQ(w.query_count(), g.nontrivial_count());
}

TEST(WorkingGraph, ContractingABridgeMergesItsEndpoints) {
  // Triangle 0-1-2 plus a pendant edge 2-3.
  std::vector<UncertainEdge> edges = {
      {0, 0, 1, Interval::trivial(q(1)), q(1), q(1), ""},
      {1, 1, 2, Interval::trivial(q(2)), q(2), q(2), ""},
      {2, 2, 0, Interval::trivial(q(3)), q(3), q(3), ""},
      {3, 2, 3, Interval::open(q(0), q(1)), q(1, 2), q(1, 2), ""},
  };
  UncertainGraph g(4, edges);
  WorkingGraph w(g, ValueSource::Truth);
  w.contract(3);
  EXPECT_EQ(w.representative(3), w.representative(2));
  EXPECT_EQ(w.present_count(), 3u);
  w.remove(2);
  EXPECT_THROW(w.remove(0), PreconditionViolated);
}

TEST(WorkingGraph, ContractionDeletesParallelLoops) {
  std::vector<UncertainEdge> edges = {
      {0, 0, 1, Interval::trivial(q(1)), q(1), q(1), ""},
      {1, 0, 1, Interval::trivial(q(2)), q(2), q(2), ""},
  };
  UncertainGraph g(2, edges);
  WorkingGraph w(g, ValueSource::Truth);
  w.contract(0);
  EXPECT_EQ(w.status(1), EdgeStatus::Deleted);
  EXPECT_EQ(w.present_count(), 0u);
}

TEST(WorkingGraph, ResidualInstanceKeepsPresentEdges) {
  UncertainGraph g = gen_vc_flip(8, FlipVariant::OneSpanning);
  WorkingGraph w(g, ValueSource::Truth);
  w.contract(*g.find("l4"));
  UncertainGraph r = residual_instance(g, w);
  EXPECT_EQ(r.edge_count(), g.edge_count() - 1);
  EXPECT_EQ(r.vertex_count(), g.vertex_count() - 1);
}

}  // namespace
}  // namespace mstu
