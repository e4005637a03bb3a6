#include "steinercut/terminal_decomp.hpp"

#include <atomic>

#include "steinercut/error.hpp"
#include "steinercut/maxflow.hpp"

namespace stc {

namespace {

std::atomic<std::int64_t> g_decomp_seq{0};

// Smallest d with (6/5)^d >= t: both recursion branches keep at least a
// sixth of the terminals on each side, so depth stays within this.
std::size_t depth_bound(std::size_t t) {
  if (t <= 1) return 1;
  BigInt num = 6, den = 5, target = static_cast<std::int64_t>(t);
  std::size_t d = 0;
  BigInt p6 = 1, p5 = 1;
  while (p6 < target * p5) {
    p6 *= 6;
    p5 *= 5;
    ++d;
  }
  return d + 1;
}

struct DecompWorker {
  const Graph& g;
  Weight delta;
  Rational psi;
  DecompOptions opt;
  TerminalDecomposition result;
  std::size_t max_depth_allowed = 0;

  void recurse(const VertexSet& cluster, const VertexSet& terminals,
               std::size_t depth) {
    result.recursion_depth = std::max(result.recursion_depth, depth);
    check_internal(depth <= max_depth_allowed,
                   "decomposition recursion exceeded the balance bound");
    if (terminals.count() <= 1) {
      result.clusters.push_back(cluster);
      return;
    }

    InducedSubgraph sub = induced_subgraph_mapped(g, cluster);
    VertexSet sub_terms(sub.graph.vertex_count());
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
      if (terminals.contains(sub.to_parent[i])) sub_terms.insert(i);
    Graph local = sub.graph.with_terminals(sub_terms);

    GameOptions go;
    go.c_l = opt.c_l;
    go.c_s = opt.c_s;
    go.brute_cap = opt.brute_cap;
    go.batch_prefix = opt.batch_prefix + "/L" + std::to_string(depth);
    CutGameOutcome outcome = cut_game(local, delta, psi, go);
    result.rounds_per_game.push_back(outcome.rounds);

    auto lift = [&](const VertexSet& local_set) {
      VertexSet out(g.vertex_count());
      for (std::size_t v : local_set.to_vector())
        out.insert(sub.to_parent[v]);
      return out;
    };

    if (outcome.kind == CutGameOutcome::Kind::TerminalStrongCluster) {
      VertexSet kept = lift(outcome.cluster);
      result.clusters.push_back(kept);
      if (outcome.residual_cut) {
        VertexSet rest = cluster - kept;
        check_internal(!rest.empty(), "residual cut with empty complement");
        recurse(rest, terminals & rest, depth + 1);
      }
      return;
    }

    VertexSet side = lift(outcome.cut.side);
    VertexSet other = cluster - side;
    check_internal(!side.empty() && !other.empty(),
                   "balanced cut side empty after lifting");
    recurse(side, terminals & side, depth + 1);
    recurse(other, terminals & other, depth + 1);
  }
};

}  // namespace

TerminalDecomposition terminal_decomp(const Graph& g, const VertexSet& cluster,
                                      const VertexSet& terminals, Weight delta,
                                      const Rational& psi,
                                      const DecompOptions& opt) {
  if (!terminals.is_subset_of(cluster))
    fail_invalid("terminals must lie inside the cluster");
  if (delta <= 0) fail_invalid("delta must be positive");

  DecompOptions options = opt;
  if (options.batch_prefix.empty())
    options.batch_prefix = "decomp" + std::to_string(++g_decomp_seq);

  DecompWorker worker{g, delta, psi, options, {}, 0};
  worker.result.root_cluster = cluster;
  worker.result.root_terminals = terminals;
  worker.result.delta = delta;
  worker.result.psi = psi;
  worker.result.c_ic = options.c_ic;
  worker.max_depth_allowed = depth_bound(terminals.count());

  std::size_t t_count = terminals.count();
  worker.result.params =
      derive_game_params(std::max<std::size_t>(cluster.count(), 2),
                         std::max<std::size_t>(t_count, 2), delta, psi,
                         options.c_l, options.c_s)
          .achieved();

  std::int64_t flows_before = FlowCounter::instance().individual();
  worker.recurse(cluster, terminals, 1);
  worker.result.flow_calls_used =
      FlowCounter::instance().individual() - flows_before;

  // Intercluster weight within the charging bound.
  TerminalDecomposition& d = worker.result;
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < d.clusters.size(); ++i)
    for (VertexId v : d.clusters[i].to_vector()) {
      check_internal(owner[v] == -1, "decomposition clusters overlap");
      owner[v] = static_cast<int>(i);
    }
  for (VertexId v : cluster.to_vector())
    check_internal(owner[v] >= 0, "decomposition does not cover the cluster");
  d.intercluster_weight = 0;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    if (!cluster.contains(e.u) || !cluster.contains(e.v)) continue;
    if (owner[e.u] != owner[e.v]) d.intercluster_weight += e.w;
  }
  std::int64_t lg_t = t_count <= 1 ? 0 : ceil_log2(BigInt(static_cast<std::int64_t>(t_count)));
  Rational bound = Rational(options.c_ic) * psi * Rational(delta) *
                   Rational(static_cast<std::int64_t>(t_count)) * Rational(lg_t);
  check_internal(Rational(d.intercluster_weight) <= bound,
                 "intercluster weight above the charging bound");
  return d;
}

VerifyReport verify_decomposition(const Graph& g, const TerminalDecomposition& d,
                                  std::size_t brute_cap) {
  VerifyReport report;

  // Disjoint cover of the root cluster.
  std::vector<int> owner(g.vertex_count(), -1);
  bool overlap = false, covered = true;
  for (std::size_t i = 0; i < d.clusters.size(); ++i) {
    for (VertexId v : d.clusters[i].to_vector()) {
      if (owner[v] != -1) overlap = true;
      owner[v] = static_cast<int>(i);
    }
  }
  for (VertexId v : d.root_cluster.to_vector())
    if (owner[v] < 0) covered = false;
  report.add("disjoint", !overlap, overlap ? "overlap between clusters" : "");
  report.add("cover", covered, covered ? "" : "cluster vertices missing");

  // Intercluster weight: stored value matches and obeys the bound.
  Weight w = 0;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    if (!d.root_cluster.contains(e.u) || !d.root_cluster.contains(e.v)) continue;
    if (owner[e.u] >= 0 && owner[e.v] >= 0 && owner[e.u] != owner[e.v]) w += e.w;
  }
  report.add("weight-recompute", w == d.intercluster_weight,
             "stored " + std::to_string(d.intercluster_weight) +
                 " recomputed " + std::to_string(w));
  std::size_t t_count = d.root_terminals.count();
  std::int64_t lg_t =
      t_count <= 1 ? 0 : ceil_log2(BigInt(static_cast<std::int64_t>(t_count)));
  Rational bound = Rational(d.c_ic) * d.psi * Rational(d.delta) *
                   Rational(static_cast<std::int64_t>(t_count)) * Rational(lg_t);
  report.add("weight-bound", Rational(w) <= bound,
             "weight " + std::to_string(w) + " vs bound " + bound.str());

  // Per-cluster terminal strength at the achieved parameters.
  if (g.vertex_count() <= brute_cap) {
    Graph flagged = g.with_terminals(d.root_terminals);
    bool all_ok = true;
    std::string detail;
    for (std::size_t i = 0; i < d.clusters.size(); ++i) {
      CertifyResult cr = certify_terminal_strong_bruteforce(
          flagged, d.clusters[i], d.params, brute_cap);
      if (!cr.ok) {
        all_ok = false;
        detail = "cluster " + std::to_string(i) + " fails the certifier";
        break;
      }
    }
    report.add("cluster-certificates", all_ok, detail);
  } else {
    report.add("cluster-certificates", true, "skipped: above the brute cap");
  }
  return report;
}

}  // namespace stc
