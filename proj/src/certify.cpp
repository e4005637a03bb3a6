#include "steinercut/certify.hpp"

#include <algorithm>

#include "steinercut/error.hpp"

namespace stc {

namespace {

void require_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.vertex_count() > cap)
    fail_capacity(std::string(what) + ": vertex count " +
                  std::to_string(g.vertex_count()) + " exceeds cap " +
                  std::to_string(cap));
}

}  // namespace

void for_each_cut_gray(const Graph& g,
                       const std::function<void(VertexId, bool)>& flip,
                       const std::function<void(const VertexSet&, Weight)>& visit) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return;
  VertexSet side(n);
  side.insert(0);
  Weight w = 0;
  for (std::size_t ei : g.incident(0)) {
    const Edge& e = g.edges()[ei];
    if (e.u != e.v) w += e.w;
  }
  std::size_t in_count = 1;
  visit(side, w);
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    VertexId v = static_cast<VertexId>(__builtin_ctzll(i)) + 1;
    bool added = !side.contains(v);
    side.toggle(v);
    in_count += added ? 1 : -1;
    for (std::size_t ei : g.incident(v)) {
      const Edge& e = g.edges()[ei];
      if (e.u == e.v) continue;
      VertexId o = e.u == v ? e.v : e.u;
      // Crosses now iff the endpoints ended up on different sides.
      if (side.contains(o) != side.contains(v))
        w += e.w;
      else
        w -= e.w;
    }
    flip(v, added);
    if (in_count == n) continue;  // improper
    visit(side, w);
  }
}

CertifyResult certify_strong_bruteforce(const Graph& g, const VertexSet& cluster,
                                        const StrengthParams& p,
                                        std::size_t cap) {
  require_cap(g, cap, "strength certifier");
  const std::size_t cluster_size = cluster.count();
  std::size_t in_cluster = cluster.contains(0) ? 1 : 0;

  // Inner boundary of the current side within G[cluster]. The side
  // starts as {0}; every in-cluster edge at 0 crosses it.
  Weight inner = 0;
  for (std::size_t ei : g.incident(0)) {
    const Edge& e = g.edges()[ei];
    if (e.u == e.v) continue;
    if (cluster.contains(e.u) && cluster.contains(e.v)) inner += e.w;
  }
  VertexSet tracked(g.vertex_count());
  tracked.insert(0);

  CertifyResult result;
  auto flip = [&](VertexId v, bool added) {
    tracked.toggle(v);
    if (!cluster.contains(v)) return;
    in_cluster += added ? 1 : -1;
    for (std::size_t ei : g.incident(v)) {
      const Edge& e = g.edges()[ei];
      if (e.u == e.v) continue;
      if (!cluster.contains(e.u) || !cluster.contains(e.v)) continue;
      VertexId o = e.u == v ? e.v : e.u;
      if (tracked.contains(o) != tracked.contains(v))
        inner += e.w;
      else
        inner -= e.w;
    }
  };
  const Rational gamma_delta = p.gamma * Rational(p.delta);
  auto visit = [&](const VertexSet& side, Weight w) {
    if (!result.ok) return;
    if (w > p.delta) return;
    std::size_t mc = std::min(in_cluster, cluster_size - in_cluster);
    if (static_cast<std::int64_t>(mc) > p.s) {
      result.ok = false;
      result.witness = Cut{side, w};
      return;
    }
    if (mc > 0 && Rational(inner) < gamma_delta) {
      result.ok = false;
      result.witness = Cut{side, w};
    }
  };
  for_each_cut_gray(g, flip, visit);
  return result;
}

CertifyResult certify_terminal_strong_bruteforce(const Graph& g,
                                                 const VertexSet& cluster,
                                                 const StrengthParams& p,
                                                 std::size_t cap) {
  require_cap(g, cap, "terminal strength certifier");
  const VertexSet& terms = g.terminals();
  const VertexSet cluster_terms = cluster & terms;
  const std::size_t total_terms = terms.count();
  const std::size_t cluster_term_total = cluster_terms.count();

  std::size_t terms_in_side = terms.contains(0) ? 1 : 0;
  std::size_t cluster_terms_in_side = cluster_terms.contains(0) ? 1 : 0;
  Weight inner = 0;
  for (std::size_t ei : g.incident(0)) {
    const Edge& e = g.edges()[ei];
    if (e.u == e.v) continue;
    if (cluster.contains(e.u) && cluster.contains(e.v)) inner += e.w;
  }
  VertexSet tracked(g.vertex_count());
  tracked.insert(0);

  CertifyResult result;
  auto flip = [&](VertexId v, bool added) {
    tracked.toggle(v);
    if (terms.contains(v)) terms_in_side += added ? 1 : -1;
    if (cluster_terms.contains(v)) cluster_terms_in_side += added ? 1 : -1;
    if (!cluster.contains(v)) return;
    for (std::size_t ei : g.incident(v)) {
      const Edge& e = g.edges()[ei];
      if (e.u == e.v) continue;
      if (!cluster.contains(e.u) || !cluster.contains(e.v)) continue;
      VertexId o = e.u == v ? e.v : e.u;
      if (tracked.contains(o) != tracked.contains(v))
        inner += e.w;
      else
        inner -= e.w;
    }
  };
  const Rational gamma_delta = p.gamma * Rational(p.delta);
  auto visit = [&](const VertexSet& side, Weight w) {
    if (!result.ok) return;
    if (w > p.delta) return;
    if (terms_in_side == 0 || terms_in_side == total_terms) return;  // not Steiner
    std::size_t a = cluster_terms_in_side;
    std::size_t b = cluster_term_total - a;
    if (static_cast<std::int64_t>(std::min(a, b)) > p.s) {
      result.ok = false;
      result.witness = Cut{side, w};
      return;
    }
    if (a > 0 && b > 0 && Rational(inner) < gamma_delta) {
      result.ok = false;
      result.witness = Cut{side, w};
    }
  };
  for_each_cut_gray(g, flip, visit);
  return result;
}

BruteResult brute_min_steiner_cut(const Graph& g, std::size_t cap) {
  require_cap(g, cap, "all-cuts oracle");
  if (g.terminal_count() < 2) fail_invalid("need at least two terminals");
  const VertexSet& terms = g.terminals();
  const std::size_t total_terms = terms.count();
  std::size_t terms_in_side = terms.contains(0) ? 1 : 0;

  bool found = false;
  BruteResult best;
  auto flip = [&](VertexId v, bool added) {
    if (terms.contains(v)) terms_in_side += added ? 1 : -1;
  };
  auto visit = [&](const VertexSet& side, Weight w) {
    if (terms_in_side == 0 || terms_in_side == total_terms) return;
    if (!found || w < best.value) {
      found = true;
      best.value = w;
      best.side = side;
    }
  };
  for_each_cut_gray(g, flip, visit);
  check_internal(found, "no Steiner cut enumerated");
  return best;
}

std::vector<VertexSet> brute_all_min_steiner_sides(const Graph& g,
                                                   std::size_t cap) {
  Weight best = brute_min_steiner_cut(g, cap).value;
  const VertexSet& terms = g.terminals();
  const std::size_t total_terms = terms.count();
  std::size_t terms_in_side = terms.contains(0) ? 1 : 0;
  std::vector<VertexSet> sides;
  auto flip = [&](VertexId v, bool added) {
    if (terms.contains(v)) terms_in_side += added ? 1 : -1;
  };
  auto visit = [&](const VertexSet& side, Weight w) {
    if (terms_in_side == 0 || terms_in_side == total_terms) return;
    if (w == best) sides.push_back(side);
  };
  for_each_cut_gray(g, flip, visit);
  return sides;
}

std::optional<VolumeViolation> find_volume_violating_cut(
    const Graph& g, const std::vector<VertexSet>& clusters, Weight delta0,
    Weight s0, std::size_t cap) {
  require_cap(g, cap, "violating-cut search");
  std::vector<Weight> vol_total(clusters.size(), 0);
  std::vector<Weight> vol_in(clusters.size(), 0);
  std::vector<int> cluster_of(g.vertex_count(), -1);
  for (std::size_t c = 0; c < clusters.size(); ++c)
    for (VertexId v : clusters[c].to_vector()) {
      cluster_of[v] = static_cast<int>(c);
      vol_total[c] += g.weighted_degree(v);
    }
  if (cluster_of[0] >= 0) vol_in[cluster_of[0]] += g.weighted_degree(0);

  std::optional<VolumeViolation> out;
  auto flip = [&](VertexId v, bool added) {
    if (cluster_of[v] >= 0)
      vol_in[cluster_of[v]] += added ? g.weighted_degree(v) : -g.weighted_degree(v);
  };
  auto visit = [&](const VertexSet& side, Weight w) {
    if (out || w > delta0) return;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      Weight m = std::min(vol_in[c], vol_total[c] - vol_in[c]);
      if (m > s0) {
        out = VolumeViolation{side, c};
        return;
      }
    }
  };
  for_each_cut_gray(g, flip, visit);
  return out;
}

}  // namespace stc
