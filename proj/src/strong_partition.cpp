#include "steinercut/strong_partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "steinercut/error.hpp"

namespace stc {

namespace {
std::vector<RefineStats>* g_refine_sink = nullptr;
}

void set_refine_stats_collector(std::vector<RefineStats>* sink) {
  g_refine_sink = sink;
}

Graph augment_pendants(const Graph& g, Weight weight) {
  if (weight <= 0) fail_invalid("pendant weight must be positive");
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  edges.reserve(edges.size() + n);
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, n + v, weight});
  VertexSet terms(2 * n);
  for (VertexId v = 0; v < n; ++v)
    if (g.is_terminal(v)) terms.insert(v);
  Weight bound = std::max(weight, g.total_weight());
  return Graph(2 * n, std::move(edges), std::move(terms), true, bound);
}

std::pair<VertexSet, Weight> global_min_cut(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) fail_invalid("global min cut needs at least two vertices");

  // Stoer-Wagner on the weight matrix; merged vertices tracked as sets.
  std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    w[e.u][e.v] += e.w;
    w[e.v][e.u] += e.w;
  }
  std::vector<std::vector<VertexId>> members(n);
  for (VertexId v = 0; v < n; ++v) members[v] = {v};
  std::vector<char> merged(n, 0);

  Weight best = -1;
  std::vector<VertexId> best_side;
  std::size_t remaining = n;
  while (remaining > 1) {
    // Maximum adjacency order over the current contracted graph.
    std::vector<char> in_a(n, 0);
    std::vector<Weight> conn(n, 0);
    VertexId prev = SIZE_MAX, last = SIZE_MAX;
    for (std::size_t step = 0; step < remaining; ++step) {
      VertexId pick = SIZE_MAX;
      for (VertexId v = 0; v < n; ++v) {
        if (merged[v] || in_a[v]) continue;
        if (pick == SIZE_MAX || conn[v] > conn[pick]) pick = v;
      }
      in_a[pick] = 1;
      prev = last;
      last = pick;
      for (VertexId v = 0; v < n; ++v)
        if (!merged[v] && !in_a[v]) conn[v] += w[pick][v];
    }
    Weight phase_cut = 0;
    for (VertexId v = 0; v < n; ++v)
      if (!merged[v] && v != last) phase_cut += w[last][v];
    if (best < 0 || phase_cut < best) {
      best = phase_cut;
      best_side = members[last];
    }
    // Merge last into prev.
    for (VertexId v = 0; v < n; ++v) {
      if (merged[v] || v == last || v == prev) continue;
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    members[prev].insert(members[prev].end(), members[last].begin(),
                         members[last].end());
    merged[last] = 1;
    --remaining;
  }
  VertexSet side(n);
  for (VertexId v : best_side) side.insert(v);
  return {side, best};
}

namespace {

Weight total_volume(const Graph& g) {
  Weight vol = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) vol += g.weighted_degree(v);
  return vol;
}

Weight cluster_volume(const Graph& g, const VertexSet& cluster) {
  Weight vol = 0;
  for (VertexId v : cluster.to_vector()) vol += g.weighted_degree(v);
  return vol;
}

}  // namespace

Partition base_strong_partition(const Graph& g, Weight delta0, __int128 s0,
                                std::size_t brute_cap) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.weighted_degree(v) < delta0)
      fail_invalid("delta0 exceeds the minimum weighted degree");

  Partition part;
  part.clusters.push_back(VertexSet::full(g.vertex_count()));
  part.certificates.push_back(ClusterCertificate::Unverified);

  auto volume_certified = [&](const VertexSet& c) {
    // No cut can leave more than s0 volume on both sides of this
    // cluster when its total volume is at most 2*s0.
    return static_cast<__int128>(cluster_volume(g, c)) <= 2 * s0;
  };

  bool exhaustive_possible = g.vertex_count() <= brute_cap;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < part.clusters.size(); ++i) {
      if (volume_certified(part.clusters[i])) {
        part.certificates[i] = ClusterCertificate::VolumeBound;
      } else {
        open.push_back(i);
      }
    }
    if (open.empty()) break;

    if (exhaustive_possible) {
      std::vector<VertexSet> candidates;
      for (std::size_t i : open) candidates.push_back(part.clusters[i]);
      Weight s0_clamped = static_cast<Weight>(
          std::min<__int128>(s0, total_volume(g)));
      auto viol = find_volume_violating_cut(g, candidates, delta0, s0_clamped,
                                            brute_cap);
      if (!viol) {
        for (std::size_t i : open)
          part.certificates[i] = ClusterCertificate::Exhaustive;
        break;
      }
      std::size_t idx = open[viol->cluster_index];
      VertexSet a = part.clusters[idx] & viol->side;
      VertexSet b = part.clusters[idx] - viol->side;
      part.clusters[idx] = a;
      part.clusters.push_back(b);
      part.certificates.push_back(ClusterCertificate::Unverified);
      changed = true;
    } else {
      // Over the cap: split along the global minimum cut while it
      // violates, then leave the certificates unverified.
      auto [side, wcut] = global_min_cut(g);
      bool split_any = false;
      if (wcut <= delta0) {
        for (std::size_t i : open) {
          VertexSet a = part.clusters[i] & side;
          VertexSet b = part.clusters[i] - side;
          Weight va = cluster_volume(g, a);
          Weight vb = cluster_volume(g, b);
          if (static_cast<__int128>(va) > s0 &&
              static_cast<__int128>(vb) > s0) {
            part.clusters[i] = a;
            part.clusters.push_back(b);
            part.certificates.push_back(ClusterCertificate::Unverified);
            split_any = true;
          }
        }
      }
      if (!split_any) break;  // nothing more this heuristic can do
      changed = true;
    }
  }

  // Recompute intercluster weight.
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < part.clusters.size(); ++i)
    for (VertexId v : part.clusters[i].to_vector()) owner[v] = static_cast<int>(i);
  part.intercluster_weight = 0;
  for (const Edge& e : g.edges())
    if (e.u != e.v && owner[e.u] != owner[e.v]) part.intercluster_weight += e.w;
  return part;
}

Partition gamma_refine(const Graph& g, const VertexSet& cluster,
                       Weight alpha_delta, const Rational& gamma, Weight delta,
                       RefineStats* stats) {
  RefineStats local;
  const std::vector<VertexId> members = cluster.to_vector();
  const std::size_t k = members.size();
  std::vector<std::size_t> local_of(g.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < k; ++i) local_of[members[i]] = i;

  struct WorkEdge {
    std::size_t a, b;  // current super endpoints
    Weight w;
    bool alive;
  };
  std::vector<WorkEdge> wedges;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    if (!cluster.contains(e.u) || !cluster.contains(e.v)) continue;
    wedges.push_back({local_of[e.u], local_of[e.v], e.w, true});
  }
  local.edge_count = wedges.size();

  std::vector<std::vector<std::size_t>> incident(k);
  std::vector<std::size_t> n_inc(k, 0);  // alive incident edge counts
  std::vector<Weight> degree(k, 0);
  std::map<std::pair<std::size_t, std::size_t>, Weight> pair_weight;
  auto key = [](std::size_t a, std::size_t b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  for (std::size_t i = 0; i < wedges.size(); ++i) {
    incident[wedges[i].a].push_back(i);
    incident[wedges[i].b].push_back(i);
    n_inc[wedges[i].a] += 1;
    n_inc[wedges[i].b] += 1;
    degree[wedges[i].a] += wedges[i].w;
    degree[wedges[i].b] += wedges[i].w;
    pair_weight[key(wedges[i].a, wedges[i].b)] += wedges[i].w;
  }

  std::vector<char> alive(k, 1);
  std::vector<std::vector<VertexId>> preimage(k);
  for (std::size_t i = 0; i < k; ++i) preimage[i] = {members[i]};

  // Max-heap of contractible pairs and min-heap of degrees, both with
  // lazy invalidation against the maintained maps.
  using PairEntry = std::pair<Weight, std::pair<std::size_t, std::size_t>>;
  std::priority_queue<PairEntry> pair_heap;
  for (auto& [pk, pw] : pair_weight) pair_heap.push({pw, pk});
  using DegEntry = std::pair<Weight, std::size_t>;
  std::priority_queue<DegEntry, std::vector<DegEntry>, std::greater<>> deg_heap;
  for (std::size_t i = 0; i < k; ++i) deg_heap.push({degree[i], i});

  const Rational contract_threshold = gamma * Rational(alpha_delta);
  // Weighted degree at most delta/100 peels a vertex off.
  auto removable = [&](Weight d) {
    return Rational(d) <= Rational(BigInt(delta), BigInt(100));
  };

  Partition out;

  auto kill_edge = [&](std::size_t ei) {
    wedges[ei].alive = false;
    local.update_count += 1;
  };

  auto contract = [&](std::size_t a, std::size_t b) {
    // Survivor is the endpoint with more (alive) incident edges.
    std::size_t u = a, v = b;  // u dies, v survives
    if (n_inc[a] > n_inc[b] || (n_inc[a] == n_inc[b] && a < b)) std::swap(u, v);
    // Drop the contracted parallel edges.
    std::vector<std::size_t> keep;
    for (std::size_t ei : incident[u]) {
      WorkEdge& e = wedges[ei];
      if (!e.alive || (e.a != u && e.b != u)) continue;
      std::size_t other = e.a == u ? e.b : e.a;
      if (other == v) {
        degree[u] -= e.w;
        degree[v] -= e.w;
        n_inc[u] -= 1;
        n_inc[v] -= 1;
        kill_edge(ei);
      } else {
        keep.push_back(ei);
      }
    }
    pair_weight.erase(key(u, v));
    // Re-point the remaining edges of u at v.
    for (std::size_t ei : keep) {
      WorkEdge& e = wedges[ei];
      std::size_t other = e.a == u ? e.b : e.a;
      e.a = v;
      e.b = other;
      incident[v].push_back(ei);
      n_inc[u] -= 1;
      n_inc[v] += 1;
      local.update_count += 1;
      auto old_key = key(u, other);
      auto it = pair_weight.find(old_key);
      it->second -= e.w;
      if (it->second == 0) pair_weight.erase(it);
      Weight& nw = pair_weight[key(v, other)];
      nw += e.w;
      pair_heap.push({nw, key(v, other)});
      degree[v] += e.w;
    }
    incident[u].clear();
    degree[u] = 0;
    alive[u] = 0;
    preimage[v].insert(preimage[v].end(), preimage[u].begin(), preimage[u].end());
    preimage[u].clear();
    deg_heap.push({degree[v], v});
    local.contractions += 1;
  };

  auto remove_vertex = [&](std::size_t v) {
    for (std::size_t ei : incident[v]) {
      WorkEdge& e = wedges[ei];
      if (!e.alive || (e.a != v && e.b != v)) continue;
      std::size_t other = e.a == v ? e.b : e.a;
      degree[other] -= e.w;
      degree[v] -= e.w;
      n_inc[other] -= 1;
      n_inc[v] -= 1;
      auto it = pair_weight.find(key(v, other));
      if (it != pair_weight.end()) {
        it->second -= e.w;
        if (it->second == 0) pair_weight.erase(it);
      }
      deg_heap.push({degree[other], other});
      kill_edge(ei);
    }
    incident[v].clear();
    alive[v] = 0;
    VertexSet c(g.vertex_count());
    for (VertexId orig : preimage[v]) c.insert(orig);
    out.clusters.push_back(std::move(c));
    out.certificates.push_back(ClusterCertificate::Exhaustive);
    preimage[v].clear();
    local.removals += 1;
  };

  while (true) {
    bool acted = false;
    // Rule 1: heaviest contractible pair first.
    while (!pair_heap.empty()) {
      auto [pw, pk] = pair_heap.top();
      auto it = pair_weight.find(pk);
      if (it == pair_weight.end() || it->second != pw || !alive[pk.first] ||
          !alive[pk.second]) {
        pair_heap.pop();
        continue;
      }
      if (Rational(pw) >= contract_threshold) {
        pair_heap.pop();
        contract(pk.first, pk.second);
        acted = true;
      }
      break;
    }
    if (acted) continue;
    // Rule 2: lightest removable vertex.
    while (!deg_heap.empty()) {
      auto [d, v] = deg_heap.top();
      if (!alive[v] || degree[v] != d) {
        deg_heap.pop();
        continue;
      }
      if (removable(d)) {
        deg_heap.pop();
        remove_vertex(v);
        acted = true;
      }
      break;
    }
    if (!acted) break;
  }

  // Everything still alive collapses into one final cluster.
  VertexSet survivor(g.vertex_count());
  bool any = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!alive[i]) continue;
    for (VertexId orig : preimage[i]) survivor.insert(orig);
    any = true;
  }
  if (any) {
    out.clusters.push_back(std::move(survivor));
    out.certificates.push_back(ClusterCertificate::Exhaustive);
  }

  // Added intercluster weight and the update budget are hard contracts.
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.clusters.size(); ++i)
    for (VertexId v : out.clusters[i].to_vector()) owner[v] = static_cast<int>(i);
  out.intercluster_weight = 0;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    if (!cluster.contains(e.u) || !cluster.contains(e.v)) continue;
    if (owner[e.u] != owner[e.v]) out.intercluster_weight += e.w;
  }
  local.added_intercluster_weight = out.intercluster_weight;
  check_internal(
      Rational(out.intercluster_weight) <=
          Rational(BigInt(static_cast<std::int64_t>(k)) * BigInt(delta),
                   BigInt(100)),
      "refinement intercluster weight above |C|*delta/100");
  if (local.edge_count == 0) {
    check_internal(local.update_count == 0, "updates on an edgeless cluster");
  } else {
    double m = static_cast<double>(local.edge_count);
    double bound = 2.0 * m * std::log2(2.0 * m) + m;
    check_internal(static_cast<double>(local.update_count) <= bound + 1e-9,
                   "refinement update count above 2m*log2(2m)+m");
  }
  if (stats) *stats = local;
  if (g_refine_sink) g_refine_sink->push_back(local);
  return out;
}

Partition strong_partition_with(const Graph& h, Weight delta, std::int64_t alpha,
                                std::int64_t s, const Rational& gamma,
                                std::size_t brute_cap,
                                std::vector<RefineStats>* refine_stats) {
  const std::size_t n = h.vertex_count();
  if (delta <= 0) fail_invalid("delta must be positive");
  if (alpha <= 0 || s <= 0) fail_invalid("alpha and s must be positive");
  BigInt budget = BigInt(alpha) * BigInt(delta) * BigInt(static_cast<std::int64_t>(n));
  if (BigInt(h.total_weight()) > budget)
    fail_invalid("total edge weight above alpha*delta*n");
  if (BigInt(alpha) * delta > (BigInt(1) << 56))
    fail_invalid("alpha*delta out of the supported weight range");

  const Weight alpha_delta = alpha * delta;
  Graph g0 = augment_pendants(h, alpha_delta);
  __int128 s0 = static_cast<__int128>(s) * static_cast<__int128>(alpha_delta);
  Partition base = base_strong_partition(g0, alpha_delta, s0, brute_cap);

  Partition out;
  for (std::size_t i = 0; i < base.clusters.size(); ++i) {
    VertexSet stripped(n);
    for (VertexId v : base.clusters[i].to_vector())
      if (v < n) stripped.insert(v);
    if (stripped.empty()) continue;
    RefineStats rs;
    Partition refined = gamma_refine(h, stripped, alpha_delta, gamma, delta, &rs);
    if (refine_stats) refine_stats->push_back(rs);
    for (std::size_t j = 0; j < refined.clusters.size(); ++j) {
      out.clusters.push_back(refined.clusters[j]);
      out.certificates.push_back(base.certificates[i]);
    }
  }

  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < out.clusters.size(); ++i)
    for (VertexId v : out.clusters[i].to_vector()) owner[v] = static_cast<int>(i);
  for (VertexId v = 0; v < n; ++v)
    check_internal(owner[v] >= 0, "partition does not cover every vertex");
  out.intercluster_weight = 0;
  for (const Edge& e : h.edges())
    if (e.u != e.v && owner[e.u] != owner[e.v]) out.intercluster_weight += e.w;
  check_internal(
      Rational(out.intercluster_weight) <=
          Rational(BigInt(static_cast<std::int64_t>(n)) * BigInt(delta), BigInt(50)),
      "partition intercluster weight above n*delta/50");
  return out;
}

Partition strong_partition(const Graph& h, Weight delta, std::int64_t alpha,
                           std::size_t brute_cap) {
  std::int64_t lg = std::max<std::int64_t>(
      1, ceil_log2(BigInt(std::max<std::size_t>(h.vertex_count(), 2))));
  BigInt s_big = BigInt(alpha) * alpha * lg * lg;
  std::int64_t s = Rational(s_big, 1).ceil_i64();
  Rational gamma(BigInt(1), BigInt(200) * alpha * s);
  return strong_partition_with(h, delta, alpha, s, gamma, brute_cap);
}

}  // namespace stc
