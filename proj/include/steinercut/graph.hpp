#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "steinercut/bitset.hpp"
#include "steinercut/rational.hpp"

namespace stc {

using VertexId = std::size_t;
using Weight = std::int64_t;

// Polynomial weight bound; construction rejects anything above it.
constexpr Weight kDefaultMaxWeight = Weight{1} << 24;

struct Edge {
  VertexId u;
  VertexId v;
  Weight w;
};

// Weighted undirected multigraph with dense vertex ids, terminal flags
// and self-loop support. Self-loops only arise from induced subgraphs;
// they carry weight into degrees but never into cut weights. Immutable
// after construction.
class Graph {
public:
  Graph(std::size_t vertex_count, std::vector<Edge> edges,
        VertexSet terminal_flags, bool allow_self_loops = false,
        Weight max_weight = kDefaultMaxWeight);

  static Graph empty(std::size_t vertex_count) {
    return Graph(vertex_count, {}, VertexSet(vertex_count));
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexSet& terminals() const { return terminals_; }
  bool is_terminal(VertexId v) const { return terminals_.contains(v); }
  std::size_t terminal_count() const { return terminals_.count(); }

  Graph with_terminals(VertexSet terminals) const;

  // Self-loop weight counts once, matching the degree-preserving
  // induced-subgraph convention.
  Weight weighted_degree(VertexId v) const { return degree_[v]; }
  Weight total_weight() const { return total_weight_; }

  // Incident edge ids per vertex (self-loops included once).
  const std::vector<std::size_t>& incident(VertexId v) const {
    return incident_[v];
  }

  std::vector<int> connected_components(std::size_t* count = nullptr) const;

private:
  std::size_t n_;
  std::vector<Edge> edges_;
  VertexSet terminals_;
  std::vector<Weight> degree_;
  Weight total_weight_;
  std::vector<std::vector<std::size_t>> incident_;
};

// One side of a bipartition plus its cached boundary weight.
struct Cut {
  VertexSet side;
  Weight boundary_weight = 0;
};

// Parameter block shared by the partitioning and game modules. All
// rational fields are exact; thresholds compare via integer
// cross-multiplication.
struct StrengthParams {
  std::int64_t s = 1;
  Weight delta = 1;
  Rational gamma;
  Rational kappa;
  Rational psi;
  std::int64_t alpha = 1;
  std::int64_t l_max = 1;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_parent;  // new id -> parent id
};

// G[S] with boundary edges turned into self-loops, preserving weighted
// degrees. Terminal flags restricted to S. Vertices are relabeled to
// 0..|S|-1 in increasing order of parent id.
InducedSubgraph induced_subgraph_mapped(const Graph& g, const VertexSet& s_set);
Graph induced_subgraph(const Graph& g, const VertexSet& s_set);

// Exact weight of edges crossing (side, complement); self-loops ignored.
Weight cut_weight(const Graph& g, const VertexSet& side);

// Weight of edges inside G[cluster] crossing the side. Used by the
// strength certifiers for the gamma condition.
Weight inner_cut_weight(const Graph& g, const VertexSet& cluster,
                        const VertexSet& side);

// w(boundary)/min(|side terminals|, |complement terminals|); absent when
// the cut does not separate terminals.
std::optional<Rational> terminal_sparsity(const Graph& g, const VertexSet& side);

Cut make_cut(const Graph& g, VertexSet side);

}  // namespace stc
