#include "steinercut/maxflow.hpp"

#include <limits>

#include "dinic.hpp"
#include "steinercut/error.hpp"

namespace stc {

namespace {

thread_local std::string t_batch_key;
thread_local bool t_batch_active = false;

}  // namespace

FlowCounter& FlowCounter::instance() {
  static FlowCounter counter;
  return counter;
}

std::int64_t FlowCounter::record() {
  std::int64_t id = ++individual_;
  if (t_batch_active) {
    std::lock_guard<std::mutex> lock(mu_);
    batch_keys_.insert(t_batch_key);
  } else {
    ++unbatched_;
  }
  return id;
}

void FlowCounter::reset() {
  std::lock_guard<std::mutex> lock(mu_);
  individual_ = 0;
  unbatched_ = 0;
  batch_keys_.clear();
}

std::int64_t FlowCounter::batched() const {
  std::lock_guard<std::mutex> lock(mu_);
  return unbatched_.load() + static_cast<std::int64_t>(batch_keys_.size());
}

FlowBatchScope::FlowBatchScope(std::string key)
    : previous_(t_batch_key), had_previous_(t_batch_active) {
  t_batch_key = std::move(key);
  t_batch_active = true;
}

FlowBatchScope::~FlowBatchScope() {
  t_batch_key = previous_;
  t_batch_active = had_previous_;
}

namespace {

// Arc id of the forward direction for original edge i is 2*i into the
// network's pair layout; self-loops are skipped but recorded so edge
// flows line up with g.edges().
struct BuiltNetwork {
  detail::DinicNetwork<Weight> net;
  std::vector<std::size_t> arc_of_edge;  // SIZE_MAX for self-loops
};

BuiltNetwork build_network(const Graph& g) {
  BuiltNetwork b{detail::DinicNetwork<Weight>(g.vertex_count()), {}};
  b.arc_of_edge.assign(g.edge_count(), SIZE_MAX);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.u == e.v) continue;
    b.arc_of_edge[i] = b.net.add_undirected(e.u, e.v, e.w);
  }
  return b;
}

}  // namespace

FlowResult max_flow(const Graph& g, VertexId source, VertexId sink) {
  if (source == sink) fail_invalid("max flow requires source != sink");
  if (source >= g.vertex_count() || sink >= g.vertex_count())
    fail_invalid("max flow endpoint out of range");

  BuiltNetwork b = build_network(g);
  Weight value = b.net.run(source, sink);

  FlowResult fr;
  fr.value = value;
  fr.source = source;
  fr.sink = sink;
  fr.edge_flows.assign(g.edge_count(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (b.arc_of_edge[i] != SIZE_MAX)
      fr.edge_flows[i] = b.net.net_flow(b.arc_of_edge[i]);

  std::vector<char> reach = b.net.reachable_from(source);
  VertexSet side(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (reach[v]) side.insert(v);
  check_internal(!reach[sink], "sink reachable after max flow");
  Weight recomputed = cut_weight(g, side);
  check_internal(recomputed == value, "flow value differs from min cut weight");
  fr.source_side_cut = Cut{std::move(side), recomputed};
  fr.call_id = FlowCounter::instance().record();
  return fr;
}

VertexSet max_source_side(const Graph& g, const FlowResult& fr) {
  // Residual arcs rebuilt from the stored net flows.
  detail::DinicNetwork<Weight> net(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.u == e.v) continue;
    net.add_directed(e.u, e.v, e.w - fr.edge_flows[i]);
    net.add_directed(e.v, e.u, e.w + fr.edge_flows[i]);
  }
  std::vector<char> to_sink = net.reaching(fr.sink);
  VertexSet side(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!to_sink[v]) side.insert(v);
  return side;
}

std::vector<FlowPath> decompose_paths(const FlowResult& fr, const Graph& g) {
  detail::DinicNetwork<Weight> net(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.u == e.v || fr.edge_flows[i] == 0) continue;
    // Encode the net flow as a saturated directed arc.
    if (fr.edge_flows[i] > 0)
      net.add_directed(e.u, e.v, fr.edge_flows[i]);
    else
      net.add_directed(e.v, e.u, -fr.edge_flows[i]);
  }
  net.saturate_forward();
  auto peeled = net.peel_paths(fr.source, fr.sink);
  std::vector<FlowPath> out;
  Weight total = 0;
  for (auto& p : peeled) {
    out.push_back({{p.vertices.front(), p.vertices.back()}, p.capacity});
    total += p.capacity;
  }
  check_internal(total == fr.value, "path capacities do not sum to flow value");
  check_internal(out.size() <= g.edge_count(),
                 "path decomposition produced more paths than edges");
  return out;
}

AuxFlowResult aux_terminal_flow(const Graph& g, const VertexSet& sources,
                                const VertexSet& sinks, const Rational& aux_cap,
                                bool want_paths) {
  if (sources.empty()) fail_invalid("auxiliary flow needs a nonempty source set");
  if (sinks.empty()) fail_invalid("auxiliary flow needs a nonempty sink set");
  if (sources.any_common(sinks))
    fail_invalid("auxiliary source and sink sets overlap");
  if (aux_cap <= Rational(0)) fail_invalid("auxiliary capacity must be positive");

  const BigInt scale = aux_cap.den();
  const BigInt aux_scaled = aux_cap.num();
  const std::size_t n = g.vertex_count();
  const std::size_t s = n, t = n + 1;

  BigInt bound = BigInt(g.total_weight()) * scale +
                 aux_scaled * BigInt(static_cast<std::int64_t>(
                                  sources.count() + sinks.count()));
  bound *= 4;

  AuxFlowResult result;

  auto run = [&](auto cap_tag) {
    using Cap = decltype(cap_tag);
    detail::DinicNetwork<Cap> net(n + 2);
    for (const Edge& e : g.edges()) {
      if (e.u == e.v) continue;
      net.add_undirected(e.u, e.v, detail::cap_from_bigint<Cap>(BigInt(e.w) * scale));
    }
    Cap aux = detail::cap_from_bigint<Cap>(aux_scaled);
    for (VertexId v : sources.to_vector()) net.add_directed(s, v, aux);
    for (VertexId v : sinks.to_vector()) net.add_directed(v, t, aux);

    Cap value = net.run(s, t);
    result.value = Rational(detail::cap_to_bigint<Cap>(value), scale);

    std::vector<char> reach = net.reachable_from(s);
    check_internal(!reach[t], "sink reachable after aux max flow");
    VertexSet min_side(n);
    for (VertexId v = 0; v < n; ++v)
      if (reach[v]) min_side.insert(v);
    result.min_source_side = std::move(min_side);

    std::vector<char> to_sink = net.reaching(t);
    VertexSet max_side(n);
    for (VertexId v = 0; v < n; ++v)
      if (!to_sink[v]) max_side.insert(v);
    result.max_source_side = std::move(max_side);

    if (want_paths) {
      auto peeled = net.peel_paths(s, t);
      for (auto& p : peeled) {
        check_internal(p.vertices.size() >= 4,
                       "auxiliary flow path shorter than source-terminal-"
                       "terminal-sink");
        VertexId a = p.vertices[1];
        VertexId b = p.vertices[p.vertices.size() - 2];
        result.paths.push_back(
            {{a, b}, Rational(detail::cap_to_bigint<Cap>(p.capacity), scale)});
      }
    }
  };

  if (bound <= BigInt(std::numeric_limits<std::int64_t>::max()))
    run(Weight{0});
  else if (bound <= (BigInt(1) << 126))
    run(__int128{0});
  else
    run(BigInt(0));

  result.call_id = FlowCounter::instance().record();
  return result;
}

}  // namespace stc
