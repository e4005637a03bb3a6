#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steinercut/graph.hpp"
#include "steinercut/strong_partition.hpp"

namespace stc {

// Parameters of one game instance, derived from the graph size, the
// terminal count, delta and psi. Everything downstream (partitioning
// thresholds, trimming capacities, the sparsifier's k) reads from here.
struct GameParams {
  Weight delta = 1;
  Rational psi;
  std::int64_t c_l = 4;
  std::int64_t c_s = 1;
  std::int64_t l_max = 1;   // ceil(c_l*log2 |T|) + 2
  std::int64_t alpha = 1;   // ceil(l_max/psi)
  std::int64_t s = 1;       // ceil(c_s*(l_max/psi)^2*ceil(log2 n)^2)
  Rational gamma;           // 1/(200*alpha*s)
  Rational kappa_trim;      // min(gamma/(2s), gamma/6)
  std::int64_t s_out = 1;   // max(ceil(2/kappa)+s, 3s), clamped to int64
  BigInt sparsify_k;        // ceil(2*s^2/gamma)

  StrengthParams achieved() const {
    StrengthParams p;
    p.s = s_out;
    p.delta = delta;
    p.gamma = kappa_trim;
    p.kappa = kappa_trim;
    p.psi = psi;
    p.alpha = alpha;
    p.l_max = l_max;
    return p;
  }
};

GameParams derive_game_params(std::size_t n, std::size_t terminal_count,
                              Weight delta, const Rational& psi,
                              std::int64_t c_l = 4, std::int64_t c_s = 1);

// Auxiliary-source max flow between a terminal group and its
// complement, per-terminal capacity delta*kappa. A proper returned cut
// is delta*kappa-terminal-sparse.
struct CutOrFlowResult {
  Rational flow_value;
  VertexSet cut_side;  // maximal source side; may be empty or all of V
  std::vector<std::pair<std::pair<VertexId, VertexId>, Rational>> paths;
  std::int64_t call_id = 0;
};

CutOrFlowResult cut_or_flow(const Graph& g, const VertexSet& s_terminals,
                            const Rational& kappa, Weight delta,
                            bool want_paths = false);

// Splits whole clusters into two groups, each holding between a third
// and two thirds of the total. Requires no cluster above 2/3.
std::pair<VertexSet, VertexSet> combine_bipartition(
    const std::vector<VertexSet>& clusters, std::size_t total);

struct TrimResult {
  VertexSet cluster;
  std::optional<Cut> residual;  // complement side, absent when empty
  bool used_flow = false;
};

// One flow call that shrinks a nearly-terminal-strong vertex set to a
// certified terminal-strong cluster. big_cluster == T needs no flow.
TrimResult trim(const Graph& g, const VertexSet& big_cluster,
                const GameParams& p);

struct GameOptions {
  std::int64_t c_l = 4;
  std::int64_t c_s = 1;
  std::size_t brute_cap = kDefaultBruteCap;
  std::string batch_prefix;  // batch key prefix for the per-round flows
};

struct CutGameOutcome {
  enum class Kind { TerminalStrongCluster, BalancedSparseCut };
  Kind kind = Kind::TerminalStrongCluster;
  VertexSet cluster;                // kind 1
  std::optional<Cut> residual_cut;  // kind 1; absent when cluster == V
  Cut cut;                          // kind 2: both sides >= |T|/6 terminals
  StrengthParams params_achieved;
  std::size_t rounds = 0;
  std::int64_t flow_calls = 0;
};

// The cut-matching game on the terminal cut graph H. Either certifies a
// terminal-strong cluster holding at least a third of the terminals, or
// finds a balanced psi*delta-terminal-sparse cut.
CutGameOutcome cut_game(const Graph& g, Weight delta, const Rational& psi,
                        const GameOptions& opt = {});

}  // namespace stc
