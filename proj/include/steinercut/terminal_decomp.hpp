#pragma once

#include <string>
#include <vector>

#include "steinercut/cut_matching.hpp"
#include "steinercut/graph.hpp"

namespace stc {

struct DecompOptions {
  std::int64_t c_l = 4;
  std::int64_t c_s = 1;
  std::int64_t c_ic = 8;  // intercluster bound constant
  std::size_t brute_cap = kDefaultBruteCap;
  std::string batch_prefix;  // empty: assign a fresh one
};

struct TerminalDecomposition {
  std::vector<VertexSet> clusters;  // disjoint, covering the root cluster
  Weight intercluster_weight = 0;
  StrengthParams params;  // achieved at the root game's parameters
  std::size_t recursion_depth = 0;
  std::int64_t flow_calls_used = 0;
  std::vector<std::size_t> rounds_per_game;

  // Build inputs, kept for verification.
  VertexSet root_cluster;
  VertexSet root_terminals;
  Weight delta = 1;
  Rational psi;
  std::int64_t c_ic = 8;
};

// Recursive terminal-strong decomposition: run the cut game, keep
// trimmed clusters, recurse on balanced sparse cuts. Clusters with at
// most one terminal are vacuously terminal-strong.
TerminalDecomposition terminal_decomp(const Graph& g, const VertexSet& cluster,
                                      const VertexSet& terminals, Weight delta,
                                      const Rational& psi,
                                      const DecompOptions& opt = {});

struct VerifyReport {
  struct Item {
    std::string check;
    bool pass;
    std::string detail;
  };
  bool ok = true;
  std::vector<Item> items;

  void add(const std::string& check, bool pass, const std::string& detail = "") {
    items.push_back({check, pass, detail});
    ok = ok && pass;
  }
};

// Checks disjoint cover, the intercluster-weight bound, and (under the
// brute cap) per-cluster terminal strength at the achieved parameters.
VerifyReport verify_decomposition(const Graph& g, const TerminalDecomposition& d,
                                  std::size_t brute_cap = kDefaultBruteCap);

}  // namespace stc
