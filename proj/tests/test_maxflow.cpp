#include <doctest.h>

#include "helpers.hpp"
#include "steinercut/maxflow.hpp"

using namespace stc;
using stc::testing::make_graph;
using stc::testing::vset;

TEST_CASE("single edge flow") {
  Graph g = make_graph(2, {{0, 1, 5}}, {0, 1});
  FlowResult fr = max_flow(g, 0, 1);
  CHECK(fr.value == 5);
  CHECK(fr.source_side_cut.side == vset(2, {0}));
  CHECK(fr.source_side_cut.boundary_weight == 5);
}

TEST_CASE("unit four-cycle routes two disjoint paths") {
  Graph g = stc::testing::unit_cycle(4, {0, 2});
  FlowResult fr = max_flow(g, 0, 2);
  CHECK(fr.value == 2);
  auto paths = decompose_paths(fr, g);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].capacity == 1);
  CHECK(paths[1].capacity == 1);
  CHECK(paths[0].endpoints.first == 0);
  CHECK(paths[0].endpoints.second == 2);
}

TEST_CASE("a single path flow peels into one path") {
  Graph g = make_graph(4, {{0, 1, 4}, {1, 2, 3}, {2, 3, 5}}, {0, 3});
  FlowResult fr = max_flow(g, 0, 3);
  CHECK(fr.value == 3);
  auto paths = decompose_paths(fr, g);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].capacity == 3);
}

TEST_CASE("disconnected endpoints give a zero flow") {
  Graph g = make_graph(4, {{0, 1, 2}, {2, 3, 2}}, {0, 3});
  FlowResult fr = max_flow(g, 0, 3);
  CHECK(fr.value == 0);
  CHECK(fr.source_side_cut.side == vset(4, {0, 1}));
  CHECK(decompose_paths(fr, g).empty());
}

TEST_CASE("source equal to sink is rejected") {
  Graph g = make_graph(2, {{0, 1, 1}}, {0, 1});
  CHECK_THROWS_AS(max_flow(g, 0, 0), Error);
}

TEST_CASE("identical inputs give identical flow results") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = stc::testing::random_graph(rng, 4, 10, 9);
    VertexId s = 0, t = g.vertex_count() - 1;
    FlowResult a = max_flow(g, s, t);
    FlowResult b = max_flow(g, s, t);
    CHECK(a.value == b.value);
    CHECK(a.edge_flows == b.edge_flows);
    CHECK(a.source_side_cut.side == b.source_side_cut.side);
  }
}

TEST_CASE("duality and decomposition round-trip on random graphs") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = stc::testing::random_graph(rng, 3, 12, 7);
    VertexId s = 0;
    VertexId t = 1 + rng.below(g.vertex_count() - 1);
    FlowResult fr = max_flow(g, s, t);
    CHECK(cut_weight(g, fr.source_side_cut.side) == fr.value);
    auto paths = decompose_paths(fr, g);
    Weight total = 0;
    for (const auto& p : paths) {
      CHECK(p.endpoints.first == s);
      CHECK(p.endpoints.second == t);
      CHECK(p.capacity > 0);
      total += p.capacity;
    }
    CHECK(total == fr.value);
    CHECK(paths.size() <= g.edge_count());
  }
}

TEST_CASE("flow counter tracks batched and individual calls") {
  FlowCounter::instance().reset();
  Graph g = make_graph(2, {{0, 1, 1}}, {0, 1});
  max_flow(g, 0, 1);
  {
    FlowBatchScope scope("level-a");
    max_flow(g, 0, 1);
    max_flow(g, 1, 0);
  }
  {
    FlowBatchScope scope("level-a");
    max_flow(g, 0, 1);
  }
  CHECK(FlowCounter::instance().individual() == 4);
  CHECK(FlowCounter::instance().batched() == 2);
  FlowCounter::instance().reset();
  CHECK(FlowCounter::instance().individual() == 0);
}

TEST_CASE("auxiliary terminal flow with fractional capacities is exact") {
  // Two terminals joined by a heavy edge; per-terminal capacity 1/4.
  Graph g = make_graph(2, {{0, 1, 10}}, {0, 1});
  AuxFlowResult fr = aux_terminal_flow(g, vset(2, {0}), vset(2, {1}),
                                       Rational(BigInt(1), BigInt(4)), true);
  CHECK(fr.value == Rational(BigInt(1), BigInt(4)));
  REQUIRE(fr.paths.size() == 1);
  CHECK(fr.paths[0].first.first == 0);
  CHECK(fr.paths[0].first.second == 1);
  CHECK(fr.paths[0].second == Rational(BigInt(1), BigInt(4)));
  // Both auxiliary edges saturate: the minimal side is empty and the
  // maximal side is everything.
  CHECK(fr.min_source_side.empty());
  CHECK(fr.max_source_side == VertexSet::full(2));
}
