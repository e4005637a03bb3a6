#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "steinercut/graph.hpp"

namespace stc {

constexpr std::size_t kDefaultBruteCap = 22;

struct CertifyResult {
  bool ok = true;
  std::optional<Cut> witness;
};

// Enumerates every proper bipartition of g exactly once (vertex 0 stays
// on the enumerated side) in Gray-code order. flip(v, added) fires
// before each visit so callers can maintain incremental counters;
// visit(side, weight) sees the exact boundary weight.
void for_each_cut_gray(const Graph& g,
                       const std::function<void(VertexId, bool)>& flip,
                       const std::function<void(const VertexSet&, Weight)>& visit);

// Exhaustive check of the (s, delta, gamma)-strength definition for one
// cluster: every cut of weight <= delta leaves at most s cluster
// vertices on its smaller side, and any cut splitting the cluster cuts
// at least gamma*delta weight inside it.
CertifyResult certify_strong_bruteforce(const Graph& g, const VertexSet& cluster,
                                        const StrengthParams& p,
                                        std::size_t cap = kDefaultBruteCap);

// Same restricted to Steiner cuts and terminal counts.
CertifyResult certify_terminal_strong_bruteforce(
    const Graph& g, const VertexSet& cluster, const StrengthParams& p,
    std::size_t cap = kDefaultBruteCap);

// All-cuts minimum Steiner cut; the desk-scale ground truth.
struct BruteResult {
  Weight value = 0;
  VertexSet side;
};
BruteResult brute_min_steiner_cut(const Graph& g,
                                  std::size_t cap = kDefaultBruteCap);

// Every side realizing the minimum (side contains vertex 0).
std::vector<VertexSet> brute_all_min_steiner_sides(
    const Graph& g, std::size_t cap = kDefaultBruteCap);

// Searches for a cut of weight <= delta0 whose two sides both have
// volume intersection > s0 with some cluster. Returns the side and the
// violated cluster index, or nullopt when every cluster conforms.
struct VolumeViolation {
  VertexSet side;
  std::size_t cluster_index;
};
std::optional<VolumeViolation> find_volume_violating_cut(
    const Graph& g, const std::vector<VertexSet>& clusters, Weight delta0,
    Weight s0, std::size_t cap = kDefaultBruteCap);

}  // namespace stc
