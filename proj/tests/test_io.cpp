#include <doctest.h>

#include "helpers.hpp"
#include "steinercut/io.hpp"
#include "steinercut/steiner.hpp"

using namespace stc;

TEST_CASE("parses the triangle instance") {
  Graph g = parse_dimacs(
      "p steiner 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\nt 1\nt 2\nt 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.terminal_count() == 3);
}

TEST_CASE("parser rejects malformed inputs with line numbers") {
  CHECK_THROWS_WITH_AS(parse_dimacs("p steiner 2 1\ne 1 1 5\n"),
                       doctest::Contains("line 2"), Error);
  CHECK_THROWS_AS(parse_dimacs("p steiner 2 1\ne 1 2 0\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p steiner 2 1\ne 1 2 1\nt 1\nt 1\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p steiner 2 1\ne 1 3 1\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p steiner 2 2\ne 1 2 1\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("e 1 2 1\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p steiner 2 0\nx 1\n"), Error);
}

TEST_CASE("comments and blank lines are fine") {
  Graph g = parse_dimacs("c a comment\n\np steiner 2 1\nc more\ne 1 2 4\nt 1\nt 2\n");
  CHECK(g.total_weight() == 4);
}

TEST_CASE("emit and parse round-trip generated graphs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenSpec spec;
    spec.family = seed % 2 ? "random_gnm" : "grid";
    if (seed % 2) {
      spec.params = {{"n", 8}, {"m", 14}, {"w_max", 9}, {"t", 3}};
    } else {
      spec.params = {{"rows", 3}, {"cols", 4}, {"w_max", 5}, {"t", 4}};
    }
    Generated gen = generate(spec, seed);
    Graph back = parse_dimacs(emit_dimacs(gen.graph));
    CHECK(back.vertex_count() == gen.graph.vertex_count());
    CHECK(back.terminal_count() == gen.graph.terminal_count());
    REQUIRE(back.edge_count() == gen.graph.edge_count());
    for (std::size_t i = 0; i < back.edge_count(); ++i) {
      CHECK(back.edges()[i].u == gen.graph.edges()[i].u);
      CHECK(back.edges()[i].v == gen.graph.edges()[i].v);
      CHECK(back.edges()[i].w == gen.graph.edges()[i].w);
    }
    CHECK(back.terminals() == gen.graph.terminals());
  }
}

TEST_CASE("generators are deterministic in the seed") {
  GenSpec spec;
  spec.family = "planted_cut";
  spec.params = {{"n", 20}, {"cut_w", 3}, {"inside_w", 10}, {"t", 8}};
  Generated a = generate(spec, 7);
  Generated b = generate(spec, 7);
  CHECK(emit_dimacs(a.graph) == emit_dimacs(b.graph));
  Generated c = generate(spec, 8);
  CHECK(emit_dimacs(a.graph) != emit_dimacs(c.graph));
}

TEST_CASE("generated families carry their planted values") {
  GenSpec dumb;
  dumb.family = "dumbbell";
  dumb.params = {{"size", 3}, {"bridge_w", 1}};
  Generated g1 = generate(dumb, 1);
  REQUIRE(g1.known_lambda.has_value());
  CHECK(*g1.known_lambda == 1);
  CHECK(naive_steiner_cut(g1.graph).value == 1);

  GenSpec clique;
  clique.family = "clique";
  clique.params = {{"n", 5}, {"w", 1}};
  Generated g2 = generate(clique, 1);
  REQUIRE(g2.known_lambda.has_value());
  CHECK(*g2.known_lambda == 4);
  CHECK(naive_steiner_cut(g2.graph).value == 4);

  GenSpec planted;
  planted.family = "planted_cut";
  planted.params = {{"n", 30}, {"cut_w", 3}, {"inside_w", 10}};
  Generated g3 = generate(planted, 5);
  REQUIRE(g3.known_lambda.has_value());
  CHECK(*g3.known_lambda == 3);
  CHECK(naive_steiner_cut(g3.graph).value == 3);
}

TEST_CASE("unknown family and bad parameters are rejected") {
  GenSpec bad;
  bad.family = "moebius";
  CHECK_THROWS_AS(generate(bad, 1), Error);
  GenSpec clique;
  clique.family = "clique";
  clique.params = {{"n", 1}};
  CHECK_THROWS_AS(generate(clique, 1), Error);
}
