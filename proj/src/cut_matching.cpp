#include "steinercut/cut_matching.hpp"

#include <algorithm>
#include <cassert>

#include "steinercut/error.hpp"
#include "steinercut/maxflow.hpp"

namespace stc {

GameParams derive_game_params(std::size_t n, std::size_t terminal_count,
                              Weight delta, const Rational& psi,
                              std::int64_t c_l, std::int64_t c_s) {
  if (terminal_count < 2) fail_invalid("game parameters need >= 2 terminals");
  if (delta <= 0) fail_invalid("delta must be positive");
  if (!(psi > Rational(0)) || !(psi < Rational(1)))
    fail_invalid("psi must lie in (0,1)");

  GameParams p;
  p.delta = delta;
  p.psi = psi;
  p.c_l = c_l;
  p.c_s = c_s;

  // ceil(c_l * log2 |T|) computed exactly as ceil(log2(|T|^c_l)).
  BigInt t_pow = 1;
  for (std::int64_t i = 0; i < c_l; ++i)
    t_pow *= BigInt(static_cast<std::int64_t>(terminal_count));
  p.l_max = ceil_log2(t_pow) + 2;

  Rational l_over_psi = Rational(p.l_max) / psi;
  p.alpha = l_over_psi.ceil_i64();

  std::int64_t lg = std::max<std::int64_t>(
      1, ceil_log2(BigInt(static_cast<std::int64_t>(std::max<std::size_t>(n, 2)))));
  Rational s_rat = Rational(c_s) * l_over_psi * l_over_psi *
                   Rational(lg * lg);
  p.s = std::max<std::int64_t>(3, s_rat.ceil_i64());

  p.gamma = Rational(BigInt(1), BigInt(200) * p.alpha * p.s);
  Rational k1 = p.gamma / Rational(2 * p.s);
  Rational k2 = p.gamma / Rational(6);
  p.kappa_trim = k1 < k2 ? k1 : k2;

  BigInt s_out_big = (Rational(2) / p.kappa_trim).ceil() + p.s;
  BigInt three_s = BigInt(3) * p.s;
  if (three_s > s_out_big) s_out_big = three_s;
  BigInt clamp = BigInt(1) << 62;
  p.s_out = s_out_big > clamp ? Rational(clamp, 1).ceil_i64()
                              : Rational(s_out_big, 1).ceil_i64();

  p.sparsify_k = (Rational(2 * p.s) * Rational(p.s) / p.gamma).ceil();
  return p;
}

CutOrFlowResult cut_or_flow(const Graph& g, const VertexSet& s_terminals,
                            const Rational& kappa, Weight delta,
                            bool want_paths) {
  const VertexSet& terms = g.terminals();
  if (s_terminals.empty()) fail_invalid("cut-or-flow needs a nonempty group");
  if (!s_terminals.is_subset_of(terms))
    fail_invalid("cut-or-flow group must consist of terminals");
  VertexSet sinks = terms - s_terminals;
  if (sinks.empty()) fail_invalid("cut-or-flow group must not be all of T");

  Rational cap = Rational(delta) * kappa;
  AuxFlowResult fr = aux_terminal_flow(g, s_terminals, sinks, cap, want_paths);

  CutOrFlowResult out;
  out.flow_value = fr.value;
  out.cut_side = fr.max_source_side;
  out.paths = std::move(fr.paths);
  out.call_id = fr.call_id;

  // A proper cut is delta*kappa-terminal-sparse; enforced here so every
  // caller inherits the guarantee. A side that separates no terminals
  // (possible with terminal-free components) must be weightless by the
  // same duality argument.
  std::size_t side_count = out.cut_side.count();
  if (side_count > 0 && side_count < g.vertex_count()) {
    auto sp = terminal_sparsity(g, out.cut_side);
    if (sp.has_value())
      check_internal(*sp <= cap,
                     "cut-or-flow produced a cut that is not delta*kappa-sparse");
    else
      check_internal(cut_weight(g, out.cut_side) == 0,
                     "non-separating cut-or-flow cut has positive weight");
  }
  return out;
}

std::pair<VertexSet, VertexSet> combine_bipartition(
    const std::vector<VertexSet>& clusters, std::size_t total) {
  if (clusters.empty()) fail_invalid("no clusters to combine");
  std::size_t n = clusters.front().size();
  std::vector<std::size_t> sizes;
  sizes.reserve(clusters.size());
  for (const VertexSet& c : clusters) {
    std::size_t sz = c.count();
    if (3 * sz > 2 * total)
      fail_invalid("cluster larger than 2/3 of the total; trim instead");
    sizes.push_back(sz);
  }

  VertexSet group(n);
  // A single cluster already in [total/3, 2*total/3] forms group one.
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (3 * sizes[i] >= total) {
      group = clusters[i];
      VertexSet rest(n);
      for (std::size_t j = 0; j < clusters.size(); ++j)
        if (j != i) rest = rest | clusters[j];
      return {group, rest};
    }
  }
  // Otherwise the shortest prefix exceeding total/3 works.
  std::size_t acc = 0;
  std::size_t cutoff = clusters.size();
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    group = group | clusters[i];
    acc += sizes[i];
    if (3 * acc > total) {
      cutoff = i + 1;
      break;
    }
  }
  check_internal(3 * acc > total && 3 * acc <= 2 * total,
                 "prefix grouping left the 1/3..2/3 window");
  VertexSet rest(n);
  for (std::size_t j = cutoff; j < clusters.size(); ++j)
    rest = rest | clusters[j];
  return {group, rest};
}

TrimResult trim(const Graph& g, const VertexSet& big_cluster,
                const GameParams& p) {
  const VertexSet& terms = g.terminals();
  // Caller contract: the cluster covers at least 2/3 of the terminals.
  assert(3 * big_cluster.count_common(terms) >= 2 * terms.count());
  TrimResult out;
  if ((terms - big_cluster).empty()) {
    // Every terminal is already in the cluster; nothing to route.
    out.cluster = VertexSet::full(g.vertex_count());
    out.residual = std::nullopt;
    return out;
  }
  CutOrFlowResult r = cut_or_flow(g, big_cluster, p.kappa_trim, p.delta, false);
  out.used_flow = true;
  VertexSet u = r.cut_side;
  check_internal(!u.empty(),
                 "trim produced an empty source side despite |S| > |T\\S|");
  if (u.count() == g.vertex_count()) {
    out.cluster = std::move(u);
    out.residual = std::nullopt;
    return out;
  }
  out.cluster = u;
  VertexSet rest = u.complement();
  out.residual = make_cut(g, rest);
  return out;
}

namespace {

struct CutGraph {
  std::vector<VertexId> terminal_of_local;       // local id -> graph vertex
  std::vector<std::size_t> local_of_vertex;      // graph vertex -> local id
  std::vector<Edge> edges;                       // scaled integer weights
  std::vector<std::size_t> round_of_edge;
  Weight scale = 1;  // stored weight = true weight * scale
};

}  // namespace

CutGameOutcome cut_game(const Graph& g, Weight delta, const Rational& psi,
                        const GameOptions& opt) {
  const VertexSet& terms = g.terminals();
  const std::size_t t_count = terms.count();
  if (t_count < 2) fail_invalid("cut game needs at least two terminals");

  GameParams params =
      derive_game_params(g.vertex_count(), t_count, delta, psi, opt.c_l, opt.c_s);

  CutGraph h;
  h.terminal_of_local = terms.to_vector();
  h.local_of_vertex.assign(g.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < h.terminal_of_local.size(); ++i)
    h.local_of_vertex[h.terminal_of_local[i]] = i;

  // Stored H weights are true weights times scale; scale chosen so the
  // 1/psi-weighted path capacities stay integral.
  Rational delta_psi = Rational(delta) * psi;
  BigInt dfden = delta_psi.den();
  Rational scale_rat = Rational(dfden * psi.num(), 1);
  h.scale = scale_rat.ceil_i64();
  const Weight delta_h = delta * h.scale;

  std::int64_t flows_before = FlowCounter::instance().individual();
  CutGameOutcome outcome;
  outcome.params_achieved = params.achieved();

  const Rational large_flow_threshold =
      Rational(static_cast<std::int64_t>(t_count)) * Rational(delta) * psi /
      Rational(6);

  for (std::size_t round = 1;
       round <= static_cast<std::size_t>(params.l_max); ++round) {
    outcome.rounds = round;

    Graph h_graph(t_count, h.edges, VertexSet::full(t_count), false,
                  std::max<Weight>(1, params.alpha * delta_h));
    check_internal(
        BigInt(h_graph.total_weight()) <=
            BigInt(params.alpha) * delta_h * static_cast<std::int64_t>(t_count),
        "cut graph weight above alpha*delta*|T|");
    Partition part = strong_partition_with(h_graph, delta_h, params.alpha,
                                           params.s, params.gamma, opt.brute_cap);

    // Trimming branch: a cluster holding >= 2|T|/3 terminals.
    std::size_t big_idx = SIZE_MAX;
    for (std::size_t i = 0; i < part.clusters.size(); ++i) {
      if (3 * part.clusters[i].count() >= 2 * t_count) {
        big_idx = i;
        break;
      }
    }
    if (big_idx != SIZE_MAX) {
      VertexSet big(g.vertex_count());
      for (std::size_t l : part.clusters[big_idx].to_vector())
        big.insert(h.terminal_of_local[l]);
      TrimResult tr;
      {
        std::optional<FlowBatchScope> scope;
        if (!opt.batch_prefix.empty())
          scope.emplace(opt.batch_prefix + "/r" + std::to_string(round));
        tr = trim(g, big, params);
      }
      std::size_t cluster_terms = tr.cluster.count_common(terms);
      check_internal(3 * cluster_terms >= t_count,
                     "trimmed cluster kept fewer than |T|/3 terminals");
      if (tr.residual) {
        auto sp = terminal_sparsity(g, tr.residual->side);
        check_internal(!sp.has_value() || *sp <= Rational(delta) * psi,
                       "residual cut not psi*delta-terminal-sparse");
      }
      outcome.kind = CutGameOutcome::Kind::TerminalStrongCluster;
      outcome.cluster = tr.cluster;
      outcome.residual_cut = tr.residual;
      outcome.flow_calls = FlowCounter::instance().individual() - flows_before;
      return outcome;
    }

    auto [c_local, cbar_local] = combine_bipartition(part.clusters, t_count);
    if (c_local.count() < cbar_local.count()) std::swap(c_local, cbar_local);
    check_internal(3 * c_local.count() >= t_count &&
                       3 * cbar_local.count() >= t_count,
                   "bipartition sides below |T|/3");

    VertexSet source_group(g.vertex_count());
    for (std::size_t l : c_local.to_vector())
      source_group.insert(h.terminal_of_local[l]);

    CutOrFlowResult r;
    {
      std::optional<FlowBatchScope> scope;
      if (!opt.batch_prefix.empty())
        scope.emplace(opt.batch_prefix + "/r" + std::to_string(round));
      r = cut_or_flow(g, source_group, psi, delta, true);
    }

    if (r.flow_value >= large_flow_threshold) {
      // Large flow: add the path decomposition to H at 1/psi weight.
      std::vector<Weight> added_degree(t_count, 0);
      Weight added_total = 0;
      for (auto& [endpoints, cap] : r.paths) {
        auto [a, b] = endpoints;
        check_internal(source_group.contains(a) && !source_group.contains(b),
                       "matching path does not join the two groups");
        Rational hw = cap / psi * scale_rat;
        check_internal(hw.is_integer(), "scaled cut-graph weight not integral");
        Weight w = Rational(hw).ceil_i64();
        if (w == 0) continue;
        std::size_t la = h.local_of_vertex[a];
        std::size_t lb = h.local_of_vertex[b];
        h.edges.push_back({la, lb, w});
        h.round_of_edge.push_back(round);
        added_degree[la] += w;
        added_degree[lb] += w;
        added_total += w;
      }
      for (std::size_t l = 0; l < t_count; ++l)
        check_internal(added_degree[l] <= delta_h,
                       "matching degree above delta at a terminal");
      check_internal(
          Rational(added_total) >=
              Rational(static_cast<std::int64_t>(t_count)) * delta_h / Rational(6),
          "matching total weight below |T|*delta/6");
      continue;
    }

    // Small cut: balanced and psi*delta-terminal-sparse.
    const VertexSet& side = r.cut_side;
    std::size_t side_count = side.count();
    check_internal(side_count > 0 && side_count < g.vertex_count(),
                   "small-cut branch produced an improper cut");
    std::size_t terms_in = side.count_common(terms);
    check_internal(6 * terms_in >= t_count &&
                       6 * (t_count - terms_in) >= t_count,
                   "balanced cut has a side below |T|/6 terminals");
    outcome.kind = CutGameOutcome::Kind::BalancedSparseCut;
    outcome.cut = make_cut(g, side);
    outcome.flow_calls = FlowCounter::instance().individual() - flows_before;
    return outcome;
  }

  fail_internal("cut game exceeded L_max rounds; see the termination bound");
}

}  // namespace stc
