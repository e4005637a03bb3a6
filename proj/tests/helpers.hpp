#pragma once

#include <initializer_list>
#include <vector>

#include "steinercut/graph.hpp"
#include "steinercut/io.hpp"

namespace stc::testing {

inline VertexSet vset(std::size_t n, std::initializer_list<std::size_t> ids) {
  VertexSet s(n);
  for (std::size_t v : ids) s.insert(v);
  return s;
}

inline Graph make_graph(std::size_t n, std::vector<Edge> edges,
                        std::initializer_list<std::size_t> terminals) {
  return Graph(n, std::move(edges), vset(n, terminals));
}

// Two unit triangles joined by a unit bridge; terminals far from it.
inline Graph dumbbell() {
  return make_graph(6,
                    {{0, 1, 1},
                     {1, 2, 1},
                     {0, 2, 1},
                     {3, 4, 1},
                     {4, 5, 1},
                     {3, 5, 1},
                     {0, 3, 1}},
                    {2, 5});
}

inline Graph unit_cycle(std::size_t n, std::initializer_list<std::size_t> terms) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});
  return make_graph(n, std::move(edges), terms);
}

inline Graph unit_clique(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, 1});
  VertexSet t = VertexSet::full(n);
  return Graph(n, std::move(edges), std::move(t));
}

// Small connected-ish random multigraph with random terminals.
inline Graph random_graph(Rng& rng, std::size_t n_min, std::size_t n_max,
                          Weight w_max, std::size_t t_min = 2) {
  std::size_t n = n_min + rng.below(n_max - n_min + 1);
  std::size_t m = n - 1 + rng.below(n + 2);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t p = rng.below(i);
    edges.push_back({i, p, 1 + static_cast<Weight>(rng.below(w_max))});
  }
  for (std::size_t i = n - 1; i < m; ++i) {
    std::size_t u = rng.below(n);
    std::size_t v = rng.below(n);
    if (u == v) continue;
    edges.push_back({u, v, 1 + static_cast<Weight>(rng.below(w_max))});
  }
  std::size_t t_count = t_min + rng.below(n - t_min + 1);
  VertexSet terms(n);
  std::size_t placed = 0;
  while (placed < t_count) {
    std::size_t v = rng.below(n);
    if (!terms.contains(v)) {
      terms.insert(v);
      ++placed;
    }
  }
  return Graph(n, std::move(edges), std::move(terms));
}

}  // namespace stc::testing
