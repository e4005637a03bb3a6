#pragma once

#include <optional>
#include <vector>

#include "steinercut/graph.hpp"
#include "steinercut/terminal_decomp.hpp"

namespace stc {

struct SolverOptions {
  Rational psi{BigInt(1), BigInt(64)};
  std::int64_t c_l = 4;
  std::int64_t c_s = 1;
  std::int64_t c_ic = 8;
  std::size_t brute_cap = kDefaultBruteCap;
  // Isolating-cut passes only run on terminal sets up to this size; the
  // certificate reduction keeps the solver exact either way.
  std::size_t isolating_threshold = 40;
};

struct GuessTrace {
  Weight guess = 0;
  std::vector<std::size_t> u_sizes;
  bool fallback_naive = false;
  bool skipped = false;
};

struct SteinerResult {
  Cut best_cut;
  Weight value = 0;
  Weight lambda_guess_used = 0;
  std::int64_t flow_calls = 0;
  std::vector<GuessTrace> iterations;
  std::vector<std::size_t> rounds_per_game;
  std::size_t recursion_depth = 0;
};

// Deterministic minimum Steiner cut: power-of-two guesses of the cut
// value, terminal decompositions, sparsification, with a connectivity-
// certificate reduction closing the gap exactly.
SteinerResult min_steiner_cut(const Graph& g, const SolverOptions& opt = {});

// Classical |T|-1 flow baseline; the medium-scale oracle.
SteinerResult naive_steiner_cut(const Graph& g);

// All-cuts oracle behind the same result type (capped).
SteinerResult brute_steiner_cut(const Graph& g,
                                std::size_t cap = kDefaultBruteCap);

// Minimum Steiner cut via bounded candidate passes plus the certificate
// reduction. Exact for any k; the budget parameter mirrors the
// k-unbalanced contract.
Cut unbalanced_case(const Graph& g, const VertexSet& u_set, const BigInt& k);

struct SparsifyResult {
  VertexSet selected;
  std::vector<std::size_t> trivial_clusters;
  std::vector<std::size_t> small_clusters;
  std::vector<std::size_t> large_clusters;
};

// One terminal per small cluster, s+1 per large cluster; the selection
// halves the terminal set or fails hard (callers fall back to the
// naive solver).
SparsifyResult sparsify(const Graph& g, const TerminalDecomposition& d,
                        const VertexSet& u_set, std::int64_t s,
                        const Rational& gamma);

// Forest rank of every edge: edge e lives through that many rounds of
// successive maximal spanning forests, so endpoints connected within
// {e : level[e] >= c} have pairwise min cut at least c.
std::vector<Weight> forest_death_levels(const Graph& g);

// Component ids of the subgraph {e : level[e] >= threshold}.
std::vector<int> certified_components(const Graph& g,
                                      const std::vector<Weight>& levels,
                                      Weight threshold);

}  // namespace stc
