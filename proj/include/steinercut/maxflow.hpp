#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "steinercut/graph.hpp"

namespace stc {

// Process-wide counter over the max-flow oracle. Every call counts
// individually; calls tagged with a batch key (disjoint subproblems that
// a single oracle invocation could serve) collapse to one batched call
// per distinct key.
class FlowCounter {
public:
  static FlowCounter& instance();

  std::int64_t record();  // returns the call id
  void reset();
  std::int64_t individual() const { return individual_.load(); }
  std::int64_t batched() const;

private:
  friend class FlowBatchScope;
  std::atomic<std::int64_t> individual_{0};
  std::atomic<std::int64_t> unbatched_{0};
  mutable std::mutex mu_;
  std::set<std::string> batch_keys_;
};

// RAII scope tagging flow calls with a batch key.
class FlowBatchScope {
public:
  explicit FlowBatchScope(std::string key);
  ~FlowBatchScope();
  FlowBatchScope(const FlowBatchScope&) = delete;
  FlowBatchScope& operator=(const FlowBatchScope&) = delete;

private:
  std::string previous_;
  bool had_previous_;
};

struct FlowResult {
  Weight value = 0;
  // Net flow per original edge, signed; positive means u -> v.
  std::vector<Weight> edge_flows;
  Cut source_side_cut;  // inclusion-minimal source side
  std::int64_t call_id = 0;
  VertexId source = 0;
  VertexId sink = 0;
};

struct FlowPath {
  std::pair<VertexId, VertexId> endpoints;
  Weight capacity = 0;
};

// Exact deterministic s-t max flow on the weighted undirected graph.
// The min cut is the source-reachable residual set. Self-loops carry no
// capacity. Increments the global flow counter.
FlowResult max_flow(const Graph& g, VertexId source, VertexId sink);

// Maximal source side: complement of the set of vertices that still
// reach the sink in the residual graph.
VertexSet max_source_side(const Graph& g, const FlowResult& fr);

// Peels the flow into at most m paths after cancelling flow cycles.
// Path capacities sum to the flow value.
std::vector<FlowPath> decompose_paths(const FlowResult& fr, const Graph& g);

// Max flow between two terminal groups through an auxiliary source and
// sink whose edges all carry the same (exact rational) capacity.
// Capacities are scaled to integers internally, so values and path
// capacities are exact. Counts as one flow call.
struct AuxFlowResult {
  Rational value;
  VertexSet min_source_side;  // over g's vertices; may be empty
  VertexSet max_source_side;  // over g's vertices; may be all of V
  // Path endpoints after stripping the auxiliary nodes: (source-group
  // terminal, sink-group terminal), with exact capacity.
  std::vector<std::pair<std::pair<VertexId, VertexId>, Rational>> paths;
  std::int64_t call_id = 0;
};

AuxFlowResult aux_terminal_flow(const Graph& g, const VertexSet& sources,
                                const VertexSet& sinks, const Rational& aux_cap,
                                bool want_paths);

}  // namespace stc
