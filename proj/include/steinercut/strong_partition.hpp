#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "steinercut/certify.hpp"
#include "steinercut/graph.hpp"

namespace stc {

enum class ClusterCertificate {
  VolumeBound,  // total volume too small for any violating cut
  Exhaustive,   // no violating cut exists (checked under the brute cap)
  Unverified,   // over-cap heuristic path
};

struct Partition {
  std::vector<VertexSet> clusters;
  Weight intercluster_weight = 0;
  std::vector<ClusterCertificate> certificates;
};

// Counters for the contraction/pruning refinement; the update bound is
// part of the module contract.
struct RefineStats {
  std::int64_t update_count = 0;
  Weight added_intercluster_weight = 0;
  std::size_t edge_count = 0;       // edges of the refined cluster graph
  std::size_t contractions = 0;
  std::size_t removals = 0;
};

// G0: one pendant neighbor per vertex, attached with the given weight.
// Raises the minimum weighted degree to at least that weight.
Graph augment_pendants(const Graph& g, Weight weight);

// Partitions V so that no cut of g with weight <= delta0 leaves more
// than s0 volume of any cluster on both sides. Exhaustive under the
// brute cap; above it, splits along the global minimum cut while that
// is a violating cut and flags the result unverified.
Partition base_strong_partition(const Graph& g, Weight delta0, __int128 s0,
                                std::size_t brute_cap = kDefaultBruteCap);

// Contraction/pruning refinement of one cluster: contract pairs with
// at least gamma*alpha_delta weight between them, peel vertices with
// weighted degree at most delta/100. Removed vertices become clusters;
// whatever survives contraction forms one final cluster.
Partition gamma_refine(const Graph& g, const VertexSet& cluster,
                       Weight alpha_delta, const Rational& gamma, Weight delta,
                       RefineStats* stats = nullptr);

// Full pipeline: pendant augmentation, base partition with
// delta0 = alpha*delta and s0 = s*alpha*delta, pendant stripping, then
// refinement of every cluster. Output clusters are (s, alpha*delta,
// gamma)-strong; total intercluster weight is at most n*delta/50.
Partition strong_partition_with(const Graph& h, Weight delta, std::int64_t alpha,
                                std::int64_t s, const Rational& gamma,
                                std::size_t brute_cap = kDefaultBruteCap,
                                std::vector<RefineStats>* refine_stats = nullptr);

// Convenience overload deriving s and gamma from alpha and the graph
// size: s = ceil(alpha^2 * ceil(log2 n)^2), gamma = 1/(200*alpha*s).
Partition strong_partition(const Graph& h, Weight delta, std::int64_t alpha,
                           std::size_t brute_cap = kDefaultBruteCap);

// Global minimum cut (Stoer-Wagner), used by the over-cap fallback.
// Deterministic; no flow calls. Requires n >= 2.
std::pair<VertexSet, Weight> global_min_cut(const Graph& g);

// Test hook: when a sink is installed, every gamma_refine invocation
// appends its counters there (single-threaded use only).
void set_refine_stats_collector(std::vector<RefineStats>* sink);

}  // namespace stc
