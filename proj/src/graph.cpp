#include "steinercut/graph.hpp"

#include <algorithm>

#include "steinercut/error.hpp"

namespace stc {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges,
             VertexSet terminal_flags, bool allow_self_loops, Weight max_weight)
    : n_(vertex_count),
      edges_(std::move(edges)),
      terminals_(std::move(terminal_flags)),
      degree_(vertex_count, 0),
      total_weight_(0),
      incident_(vertex_count) {
  if (terminals_.size() != n_) fail_invalid("terminal flag size mismatch");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= n_ || e.v >= n_) fail_invalid("edge endpoint out of range");
    if (e.w <= 0) fail_invalid("edge weight must be positive");
    if (e.w > max_weight) fail_invalid("edge weight above configured bound");
    if (e.u == e.v && !allow_self_loops)
      fail_invalid("self-loop outside induced subgraph");
    if (e.u == e.v) {
      degree_[e.u] += e.w;
      incident_[e.u].push_back(i);
    } else {
      degree_[e.u] += e.w;
      degree_[e.v] += e.w;
      incident_[e.u].push_back(i);
      incident_[e.v].push_back(i);
    }
    total_weight_ += e.w;
  }
}

Graph Graph::with_terminals(VertexSet terminals) const {
  return Graph(n_, edges_, std::move(terminals), true);
}

std::vector<int> Graph::connected_components(std::size_t* count) const {
  std::vector<int> comp(n_, -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < n_; ++start) {
    if (comp[start] != -1) continue;
    comp[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (std::size_t ei : incident_[v]) {
        const Edge& e = edges_[ei];
        VertexId o = e.u == v ? e.v : e.u;
        if (comp[o] == -1) {
          comp[o] = next;
          stack.push_back(o);
        }
      }
    }
    ++next;
  }
  if (count) *count = static_cast<std::size_t>(next);
  return comp;
}

InducedSubgraph induced_subgraph_mapped(const Graph& g, const VertexSet& s_set) {
  if (s_set.empty()) fail_invalid("induced subgraph of empty vertex set");
  std::vector<VertexId> to_parent;
  std::vector<std::size_t> to_sub(g.vertex_count(), SIZE_MAX);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (s_set.contains(v)) {
      to_sub[v] = to_parent.size();
      to_parent.push_back(v);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    bool in_u = s_set.contains(e.u);
    bool in_v = s_set.contains(e.v);
    if (in_u && in_v) {
      edges.push_back({to_sub[e.u], to_sub[e.v], e.w});
    } else if (in_u) {
      edges.push_back({to_sub[e.u], to_sub[e.u], e.w});
    } else if (in_v) {
      edges.push_back({to_sub[e.v], to_sub[e.v], e.w});
    }
  }
  VertexSet terms(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    if (g.is_terminal(to_parent[i])) terms.insert(i);
  return {Graph(to_parent.size(), std::move(edges), std::move(terms), true),
          std::move(to_parent)};
}

Graph induced_subgraph(const Graph& g, const VertexSet& s_set) {
  return induced_subgraph_mapped(g, s_set).graph;
}

Weight cut_weight(const Graph& g, const VertexSet& side) {
  if (side.empty() || side.count() == g.vertex_count())
    fail_invalid("cut side must be a proper nonempty subset");
  Weight w = 0;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    if (side.contains(e.u) != side.contains(e.v)) w += e.w;
  }
  return w;
}

Weight inner_cut_weight(const Graph& g, const VertexSet& cluster,
                        const VertexSet& side) {
  Weight w = 0;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    if (!cluster.contains(e.u) || !cluster.contains(e.v)) continue;
    if (side.contains(e.u) != side.contains(e.v)) w += e.w;
  }
  return w;
}

std::optional<Rational> terminal_sparsity(const Graph& g, const VertexSet& side) {
  Weight w = cut_weight(g, side);
  std::size_t inside = side.count_common(g.terminals());
  std::size_t total = g.terminal_count();
  std::size_t m = std::min(inside, total - inside);
  if (m == 0) return std::nullopt;
  return Rational(BigInt(w), BigInt(m));
}

Cut make_cut(const Graph& g, VertexSet side) {
  Weight w = cut_weight(g, side);
  return Cut{std::move(side), w};
}

}  // namespace stc
