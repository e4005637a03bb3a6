#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "steinercut/strong_partition.hpp"

using namespace stc;
using stc::testing::make_graph;
using stc::testing::vset;

namespace {

Graph two_triangles_bridge() {
  return make_graph(6,
                    {{0, 1, 1},
                     {1, 2, 1},
                     {0, 2, 1},
                     {3, 4, 1},
                     {4, 5, 1},
                     {3, 5, 1},
                     {0, 3, 1}},
                    {});
}

}  // namespace

TEST_CASE("pendant augmentation raises the minimum degree") {
  Graph g = Graph::empty(3);
  Graph g0 = augment_pendants(g, 4);
  CHECK(g0.vertex_count() == 6);
  CHECK(g0.edge_count() == 3);
  for (VertexId v = 0; v < 6; ++v) CHECK(g0.weighted_degree(v) >= 4);

  Graph tri = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, {});
  Graph tri0 = augment_pendants(tri, 2);
  for (VertexId v = 0; v < 3; ++v) CHECK(tri0.weighted_degree(v) == 4);
  for (VertexId v = 3; v < 6; ++v) CHECK(tri0.weighted_degree(v) == 2);

  Graph one = Graph::empty(1);
  Graph one0 = augment_pendants(one, 1);
  CHECK(one0.vertex_count() == 2);
  CHECK(one0.edge_count() == 1);
}

TEST_CASE("stoer-wagner finds the bridge") {
  auto [side, w] = global_min_cut(two_triangles_bridge());
  CHECK(w == 1);
  CHECK((side.count() == 3 || side.count() == 6 - 3));
}

TEST_CASE("base partition keeps a well-connected graph whole") {
  Graph k4 = stc::testing::unit_clique(4);
  // Global min cut is 3 > delta0 = 2: no qualifying cut exists.
  Partition p = base_strong_partition(k4, 2, 2);
  CHECK(p.clusters.size() == 1);
  CHECK(p.intercluster_weight == 0);
}

TEST_CASE("base partition splits the two triangles") {
  Graph g = two_triangles_bridge();
  // The bridge cut (weight 1) leaves volume 7 on both sides, so the
  // graph splits, while every within-triangle cut of weight <= 2 leaves
  // at most volume 3 on its smaller side.
  Partition p = base_strong_partition(g, 2, 3);
  REQUIRE(p.clusters.size() == 2);
  CHECK(p.intercluster_weight == 1);
  CHECK(p.clusters[0].count() == 3);
  CHECK(p.clusters[1].count() == 3);
  auto viol = find_volume_violating_cut(g, p.clusters, 2, 3);
  CHECK_FALSE(viol.has_value());
}

TEST_CASE("base partition output never admits a violating cut") {
  Graph g = two_triangles_bridge();
  for (Weight s0 : {1, 2, 3, 7}) {
    Partition p = base_strong_partition(g, 2, s0);
    auto viol = find_volume_violating_cut(g, p.clusters, 2, s0);
    CHECK_FALSE(viol.has_value());
  }
}

TEST_CASE("base partition of a single vertex") {
  Graph one = Graph::empty(1);
  Partition p = base_strong_partition(one, 0, 1);
  CHECK(p.clusters.size() == 1);
}

TEST_CASE("base partition rejects delta0 above the minimum degree") {
  Graph tri = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, {});
  CHECK_THROWS_AS(base_strong_partition(tri, 5, 1), Error);
}

TEST_CASE("refinement peels a light star into singletons") {
  Graph star = make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}, {});
  RefineStats stats;
  // Contract threshold gamma*alpha_delta = 100; removal at delta/100 = 2.
  Partition p = gamma_refine(star, VertexSet::full(4), 200,
                             Rational(BigInt(1), BigInt(2)), 200, &stats);
  CHECK(p.clusters.size() == 4);
  CHECK(p.intercluster_weight == 3);
  CHECK(Rational(p.intercluster_weight) <=
        Rational(BigInt(4) * BigInt(200), BigInt(100)));
  CHECK(stats.removals == 4);
  CHECK(stats.contractions == 0);
}

TEST_CASE("refinement contracts a heavy pair into one cluster") {
  Graph pair = make_graph(2, {{0, 1, 100}}, {});
  Partition p = gamma_refine(pair, VertexSet::full(2), 200,
                             Rational(BigInt(1), BigInt(2)), 200);
  REQUIRE(p.clusters.size() == 1);
  CHECK(p.clusters[0].count() == 2);
  CHECK(p.intercluster_weight == 0);
}

TEST_CASE("refinement keeps a heavy spanning structure whole") {
  // Path of heavy edges; every vertex degree above delta/100 and the
  // pair weights above the contraction threshold.
  Graph path = make_graph(4, {{0, 1, 50}, {1, 2, 50}, {2, 3, 50}}, {});
  Partition p = gamma_refine(path, VertexSet::full(4), 80,
                             Rational(BigInt(1), BigInt(2)), 100);
  REQUIRE(p.clusters.size() == 1);
  CHECK(p.clusters[0].count() == 4);
}

TEST_CASE("refinement on a subset cluster ignores outside edges") {
  // Only the triangle's three edges participate; the bridge is outside.
  Graph g = two_triangles_bridge();
  RefineStats stats;
  Partition p = gamma_refine(g, vset(6, {0, 1, 2}), 4,
                             Rational(BigInt(1), BigInt(8)), 100, &stats);
  CHECK(stats.edge_count == 3);
  REQUIRE(p.clusters.size() == 1);
  CHECK(p.clusters[0] == vset(6, {0, 1, 2}));
  CHECK(p.intercluster_weight == 0);
}

TEST_CASE("refinement update counter stays within the bound") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = stc::testing::random_graph(rng, 4, 12, 9);
    RefineStats stats;
    Weight delta = 1 + static_cast<Weight>(rng.below(300));
    Weight alpha_delta = delta * (1 + static_cast<Weight>(rng.below(4)));
    gamma_refine(g, VertexSet::full(g.vertex_count()), alpha_delta,
                 Rational(BigInt(1), BigInt(1 + rng.below(8))), delta, &stats);
    if (stats.edge_count > 0) {
      double m = static_cast<double>(stats.edge_count);
      CHECK(static_cast<double>(stats.update_count) <=
            2.0 * m * std::log2(2.0 * m) + m + 1e-9);
    } else {
      CHECK(stats.update_count == 0);
    }
  }
}

TEST_CASE("strong partition certifies its clusters on small graphs") {
  Rng rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = stc::testing::random_graph(rng, 2, 8, 5);
    Weight delta = 1 + static_cast<Weight>(rng.below(5));
    std::int64_t alpha = 2 + static_cast<std::int64_t>(rng.below(3));
    std::int64_t lg = std::max<std::int64_t>(
        1, ceil_log2(BigInt(static_cast<std::int64_t>(g.vertex_count()))));
    std::int64_t s = alpha * alpha * lg * lg;
    Rational gamma(BigInt(1), BigInt(200) * alpha * s);
    if (BigInt(g.total_weight()) >
        BigInt(alpha) * delta * static_cast<std::int64_t>(g.vertex_count()))
      continue;
    Partition p = strong_partition_with(g, delta, alpha, s, gamma);
    StrengthParams sp;
    sp.s = s;
    sp.delta = alpha * delta;
    sp.gamma = gamma;
    for (const VertexSet& cluster : p.clusters)
      CHECK(certify_strong_bruteforce(g, cluster, sp).ok);
    CHECK(Rational(p.intercluster_weight) <=
          Rational(BigInt(static_cast<std::int64_t>(g.vertex_count())) * delta,
                   BigInt(50)));
  }
}

TEST_CASE("strong partition trivial shapes") {
  Graph one = Graph::empty(1);
  Partition p1 = strong_partition(one, 5, 2);
  CHECK(p1.clusters.size() == 1);

  Graph edgeless = Graph::empty(4);
  Partition p2 = strong_partition(edgeless, 5, 2);
  CHECK(p2.clusters.size() == 4);
  CHECK(p2.intercluster_weight == 0);
}

TEST_CASE("strong partition rejects overweight inputs") {
  Graph heavy = make_graph(2, {{0, 1, 100}}, {});
  CHECK_THROWS_AS(strong_partition_with(heavy, 1, 2, 4,
                                        Rational(BigInt(1), BigInt(1600))),
                  Error);
}
