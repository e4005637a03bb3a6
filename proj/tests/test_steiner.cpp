#include <doctest.h>

#include "helpers.hpp"
#include "steinercut/certify.hpp"
#include "steinercut/maxflow.hpp"
#include "steinercut/steiner.hpp"

using namespace stc;
using stc::testing::make_graph;
using stc::testing::vset;

TEST_CASE("unbalanced case on two terminals is one min cut") {
  Graph g = stc::testing::dumbbell();
  Cut c = unbalanced_case(g, g.terminals(), BigInt(1));
  CHECK(c.boundary_weight == 1);
}

TEST_CASE("unbalanced case on a star of terminal leaves") {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= 5; ++i) edges.push_back({0, i, 1});
  Graph g(6, std::move(edges), vset(6, {1, 2, 3, 4, 5}));
  Cut c = unbalanced_case(g, g.terminals(), BigInt(1));
  CHECK(c.boundary_weight == 1);
  std::size_t small = std::min(c.side.count(), 6 - c.side.count());
  CHECK(small == 1);
}

TEST_CASE("unbalanced case validates its arguments") {
  Graph g = stc::testing::dumbbell();
  CHECK_THROWS_AS(unbalanced_case(g, g.terminals(), BigInt(0)), Error);
  VertexSet one(6);
  one.insert(2);
  CHECK_THROWS_AS(unbalanced_case(g, one, BigInt(1)), Error);
  VertexSet non_terminal(6);
  non_terminal.insert(0);
  non_terminal.insert(1);
  CHECK_THROWS_AS(unbalanced_case(g, non_terminal, BigInt(1)), Error);
}

TEST_CASE("unbalanced case matches the oracle on random graphs") {
  Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = stc::testing::random_graph(rng, 3, 10, 8);
    if (g.terminal_count() < 2) continue;
    Cut c = unbalanced_case(g, g.terminals(), BigInt(4));
    BruteResult br = brute_min_steiner_cut(g);
    CHECK(c.boundary_weight == br.value);
  }
}

TEST_CASE("forest levels lower-bound pairwise min cuts") {
  Rng rng(73);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = stc::testing::random_graph(rng, 3, 9, 6);
    std::vector<Weight> levels = forest_death_levels(g);
    // Bottleneck certificate: any threshold's component pairs have
    // pairwise min cut at least the threshold.
    for (Weight threshold : {Weight{1}, Weight{2}, Weight{3}, Weight{5}}) {
      std::vector<int> comp = certified_components(g, levels, threshold);
      for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
          if (comp[u] != comp[v]) continue;
          FlowResult fr = max_flow(g, u, v);
          CHECK(fr.value >= threshold);
        }
    }
  }
}

TEST_CASE("sparsify picks one terminal per small cluster") {
  GenSpec spec;
  spec.family = "planted_cut";
  spec.params = {{"n", 16}, {"cut_w", 2}, {"inside_w", 9}, {"t", 8}};
  Graph g = generate(spec, 3).graph;
  TerminalDecomposition d = terminal_decomp(
      g, VertexSet::full(16), g.terminals(), 64, Rational(BigInt(1), BigInt(4)));
  REQUIRE(d.clusters.size() == 2);
  SparsifyResult sp =
      sparsify(g, d, g.terminals(), 4, Rational(BigInt(1), BigInt(8)));
  CHECK(sp.selected.count() == 2);
  CHECK(sp.small_clusters.size() == 2);
  CHECK(sp.trivial_clusters.empty());
  CHECK(sp.large_clusters.empty());
}

TEST_CASE("sparsify takes s+1 terminals from large clusters") {
  // One cluster holding six terminals with s = 1: large, pick two.
  Graph g = stc::testing::unit_clique(6);
  TerminalDecomposition d;
  d.clusters = {VertexSet::full(6)};
  d.root_cluster = VertexSet::full(6);
  d.root_terminals = g.terminals();
  SparsifyResult sp = sparsify(g, d, g.terminals(), 1, Rational(BigInt(1), BigInt(2)));
  CHECK(sp.large_clusters.size() == 1);
  CHECK(sp.selected.count() == 2);
}

TEST_CASE("sparsify fails hard when it cannot halve") {
  Graph g = stc::testing::dumbbell();
  TerminalDecomposition d;
  d.clusters = {vset(6, {0, 1, 2}), vset(6, {3, 4, 5})};
  d.root_cluster = VertexSet::full(6);
  d.root_terminals = g.terminals();
  // Two terminals, two small clusters: the pick cannot halve.
  CHECK_THROWS_AS(sparsify(g, d, g.terminals(), 2, Rational(BigInt(1), BigInt(2))),
                  Error);
}

TEST_CASE("sparsified set hits both witness sides when clusters align") {
  // Decomposition = the two planted sides; every minimum Steiner cut is
  // the bridge cut, whose sides are exactly the two clusters.
  GenSpec spec;
  spec.family = "planted_cut";
  spec.params = {{"n", 16}, {"cut_w", 2}, {"inside_w", 9}, {"t", 8}};
  Graph g = generate(spec, 5).graph;
  TerminalDecomposition d = terminal_decomp(
      g, VertexSet::full(16), g.terminals(), 64, Rational(BigInt(1), BigInt(4)));
  REQUIRE(d.clusters.size() == 2);
  SparsifyResult sp =
      sparsify(g, d, g.terminals(), 4, Rational(BigInt(1), BigInt(8)));
  for (const VertexSet& witness : brute_all_min_steiner_sides(g)) {
    CHECK(sp.selected.any_common(witness));
    CHECK(sp.selected.any_common(witness.complement()));
  }
}

TEST_CASE("naive solver values on the named examples") {
  FlowCounter::instance().reset();
  Graph g = stc::testing::dumbbell();
  SteinerResult r = naive_steiner_cut(g);
  CHECK(r.value == 1);
  CHECK(r.flow_calls == 1);

  Graph tri = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, {0, 1, 2});
  SteinerResult r2 = naive_steiner_cut(tri);
  CHECK(r2.value == 2);
  CHECK(r2.flow_calls == 2);

  Graph pair = make_graph(2, {{0, 1, 9}}, {0, 1});
  SteinerResult r3 = naive_steiner_cut(pair);
  CHECK(r3.value == 9);
  CHECK(r3.flow_calls == 1);
}

TEST_CASE("solver on the named examples") {
  Graph g = stc::testing::dumbbell();
  SteinerResult r = min_steiner_cut(g);
  CHECK(r.value == 1);
  CHECK(r.best_cut.boundary_weight == 1);

  Graph tri = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, {0, 1, 2});
  CHECK(min_steiner_cut(tri).value == 2);

  Graph split = make_graph(4, {{0, 1, 5}, {2, 3, 5}}, {0, 2});
  SteinerResult r3 = min_steiner_cut(split);
  CHECK(r3.value == 0);
  CHECK(r3.flow_calls == 0);
}

TEST_CASE("solver matches the brute oracle on random graphs") {
  Rng rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = stc::testing::random_graph(rng, 3, 11, 9);
    if (g.terminal_count() < 2) continue;
    SteinerResult got = min_steiner_cut(g);
    BruteResult want = brute_min_steiner_cut(g);
    CHECK(got.value == want.value);
    // The returned cut really is a Steiner cut of the claimed weight.
    CHECK(cut_weight(g, got.best_cut.side) == got.value);
    std::size_t ti = got.best_cut.side.count_common(g.terminals());
    CHECK(ti > 0);
    CHECK(ti < g.terminal_count());
  }
}

TEST_CASE("decompositions at the correct guess obey the counting bounds") {
  // With delta in [lambda, 2*lambda): at most 4*c_ic*psi*|U|*log2(n)
  // clusters hold terminals (each terminal-cluster boundary is a
  // Steiner cut of weight >= lambda >= delta/2), and any minimum
  // Steiner cut splits the terminals of at most 1/gamma clusters.
  Rng rng(101);
  Rational psi(BigInt(1), BigInt(64));
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = stc::testing::random_graph(rng, 4, 11, 7);
    if (g.terminal_count() < 2) continue;
    BruteResult br = brute_min_steiner_cut(g);
    if (br.value < 1) continue;
    Weight guess = Weight{1} << ceil_log2(BigInt(br.value));
    TerminalDecomposition d = terminal_decomp(
        g, VertexSet::full(g.vertex_count()), g.terminals(), guess, psi);

    std::size_t terminal_clusters = 0;
    for (const VertexSet& c : d.clusters)
      if (c.any_common(g.terminals())) ++terminal_clusters;
    if (terminal_clusters >= 2) {
      std::int64_t lg = std::max<std::int64_t>(
          1, ceil_log2(BigInt(static_cast<std::int64_t>(g.vertex_count()))));
      Rational bound = Rational(4 * d.c_ic) * psi *
                       Rational(static_cast<std::int64_t>(g.terminal_count())) *
                       Rational(lg);
      CHECK(Rational(static_cast<std::int64_t>(terminal_clusters)) <= bound);
    }

    GameParams root = derive_game_params(g.vertex_count(), g.terminal_count(),
                                         guess, psi);
    Rational inv_gamma = Rational(1) / root.gamma;
    for (const VertexSet& side : brute_all_min_steiner_sides(g)) {
      std::int64_t cut_clusters = 0;
      for (const VertexSet& c : d.clusters) {
        VertexSet ct = c & g.terminals();
        if (ct.any_common(side) && ct.any_common(side.complement()))
          ++cut_clusters;
      }
      CHECK(Rational(cut_clusters) <= inv_gamma);
    }
  }
}

TEST_CASE("the solver is deterministic") {
  Rng rng(97);
  Graph g = stc::testing::random_graph(rng, 8, 12, 9);
  SteinerResult a = min_steiner_cut(g);
  SteinerResult b = min_steiner_cut(g);
  CHECK(a.value == b.value);
  CHECK(a.best_cut.side == b.best_cut.side);
  CHECK(a.flow_calls == b.flow_calls);
  CHECK(a.lambda_guess_used == b.lambda_guess_used);
}

TEST_CASE("solver requires two terminals") {
  Graph g = make_graph(3, {{0, 1, 1}}, {0});
  CHECK_THROWS_AS(min_steiner_cut(g), Error);
  CHECK_THROWS_AS(naive_steiner_cut(g), Error);
}
