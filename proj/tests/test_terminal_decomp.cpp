#include <doctest.h>

#include "helpers.hpp"
#include "steinercut/certify.hpp"
#include "steinercut/terminal_decomp.hpp"

using namespace stc;
using stc::testing::make_graph;
using stc::testing::vset;

TEST_CASE("single terminal short-circuits to one cluster") {
  Graph g = make_graph(4, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}}, {1});
  TerminalDecomposition d = terminal_decomp(
      g, VertexSet::full(4), g.terminals(), 4, Rational(BigInt(1), BigInt(4)));
  CHECK(d.clusters.size() == 1);
  CHECK(d.intercluster_weight == 0);
  CHECK(d.flow_calls_used == 0);
}

TEST_CASE("dumbbell splits into its two sides") {
  Graph g = stc::testing::dumbbell();
  TerminalDecomposition d = terminal_decomp(
      g, VertexSet::full(6), g.terminals(), 64, Rational(BigInt(1), BigInt(4)));
  CHECK(d.clusters.size() == 2);
  CHECK(d.intercluster_weight == 1);
  VerifyReport report = verify_decomposition(g, d);
  CHECK(report.ok);
}

TEST_CASE("all-terminal clique stays one certified cluster") {
  Graph g = stc::testing::unit_clique(6);
  TerminalDecomposition d = terminal_decomp(
      g, VertexSet::full(6), g.terminals(), 5, Rational(BigInt(1), BigInt(4)));
  CHECK(d.clusters.size() == 1);
  VerifyReport report = verify_decomposition(g, d);
  CHECK(report.ok);
}

TEST_CASE("verify rejects hand-broken decompositions") {
  Graph g = stc::testing::dumbbell();
  TerminalDecomposition d = terminal_decomp(
      g, VertexSet::full(6), g.terminals(), 64, Rational(BigInt(1), BigInt(4)));
  REQUIRE(d.clusters.size() == 2);

  TerminalDecomposition overlapping = d;
  overlapping.clusters[1].insert(overlapping.clusters[0].to_vector().front());
  VerifyReport r1 = verify_decomposition(g, overlapping);
  CHECK_FALSE(r1.ok);

  TerminalDecomposition wrong_weight = d;
  wrong_weight.intercluster_weight += 5;
  VerifyReport r2 = verify_decomposition(g, wrong_weight);
  CHECK_FALSE(r2.ok);

  TerminalDecomposition tight = d;
  tight.c_ic = 0;  // force the weight bound to zero
  VerifyReport r3 = verify_decomposition(g, tight);
  CHECK_FALSE(r3.ok);
}

TEST_CASE("decomposition invariants hold across random instances") {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = stc::testing::random_graph(rng, 3, 11, 6);
    if (g.terminal_count() < 2) continue;
    Weight delta = 1 + static_cast<Weight>(rng.below(24));
    Rational psi(BigInt(1), BigInt(1) << (2 + rng.below(5)));
    TerminalDecomposition d = terminal_decomp(g, VertexSet::full(g.vertex_count()),
                                              g.terminals(), delta, psi);
    VerifyReport report = verify_decomposition(g, d);
    CHECK(report.ok);

    // Recursion balance: depth within the 6/5 shrink bound.
    std::size_t t = g.terminal_count();
    std::size_t bound = 1;
    double size = static_cast<double>(t);
    while (size > 1.0) {
      size = size * 5.0 / 6.0;
      ++bound;
    }
    CHECK(d.recursion_depth <= bound + 1);

    // Every multi-terminal cluster certifies at the achieved parameters.
    Graph flagged = g.with_terminals(d.root_terminals);
    for (const VertexSet& cluster : d.clusters)
      CHECK(certify_terminal_strong_bruteforce(flagged, cluster, d.params).ok);
  }
}
