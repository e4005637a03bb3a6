#pragma once

// Internal deterministic Dinic engine, templated over the capacity type
// so exact scaled-rational capacities can run on int64, __int128 or
// arbitrary precision without duplicating the algorithm.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "steinercut/error.hpp"

namespace stc::detail {

template <typename Cap>
Cap cap_from_bigint(const boost::multiprecision::cpp_int& v);

template <>
inline std::int64_t cap_from_bigint<std::int64_t>(
    const boost::multiprecision::cpp_int& v) {
  return static_cast<std::int64_t>(v);
}
template <>
inline __int128 cap_from_bigint<__int128>(
    const boost::multiprecision::cpp_int& v) {
  bool neg = v < 0;
  boost::multiprecision::cpp_int a = neg ? -v : v;
  unsigned __int128 hi = static_cast<std::uint64_t>(a >> 64);
  unsigned __int128 lo = static_cast<std::uint64_t>(a & 0xffffffffffffffffULL);
  unsigned __int128 u = (hi << 64) | lo;
  return neg ? -static_cast<__int128>(u) : static_cast<__int128>(u);
}
template <>
inline boost::multiprecision::cpp_int cap_from_bigint<
    boost::multiprecision::cpp_int>(const boost::multiprecision::cpp_int& v) {
  return v;
}

template <typename Cap>
boost::multiprecision::cpp_int cap_to_bigint(const Cap& v) {
  return boost::multiprecision::cpp_int(v);
}
template <>
inline boost::multiprecision::cpp_int cap_to_bigint<__int128>(
    const __int128& v) {
  bool neg = v < 0;
  unsigned __int128 u =
      neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  boost::multiprecision::cpp_int hi = static_cast<std::uint64_t>(u >> 64);
  boost::multiprecision::cpp_int lo = static_cast<std::uint64_t>(u);
  boost::multiprecision::cpp_int r = (hi << 64) | lo;
  return neg ? -r : r;
}

template <typename Cap>
class DinicNetwork {
public:
  explicit DinicNetwork(std::size_t n) : adj_(n) {}

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  // Both directions share capacity; returns the forward arc id.
  std::size_t add_undirected(std::size_t u, std::size_t v, Cap cap) {
    return add_pair(u, v, cap, cap);
  }
  std::size_t add_directed(std::size_t u, std::size_t v, Cap cap) {
    return add_pair(u, v, cap, Cap(0));
  }

  Cap run(std::size_t s, std::size_t t) {
    Cap total(0);
    while (bfs(s, t)) {
      iter_.assign(adj_.size(), 0);
      while (true) {
        Cap pushed = dfs(s, t, Cap(-1));
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  // Signed net flow in the forward direction of the pair rooted at
  // forward arc id a.
  Cap net_flow(std::size_t a) const { return caps_[a] - arcs_[a].res; }

  // Pushes full capacity along every forward arc. Lets peel_paths treat
  // stored capacities as an existing flow.
  void saturate_forward() {
    for (std::size_t a = 0; a < arcs_.size(); a += 2) {
      arcs_[a ^ 1].res += arcs_[a].res;
      arcs_[a].res = 0;
    }
  }

  std::vector<char> reachable_from(std::size_t s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> queue{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t v = queue[i];
      for (std::size_t a : adj_[v]) {
        if (arcs_[a].res > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

  // Vertices that still reach t through residual arcs.
  std::vector<char> reaching(std::size_t t) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> queue{t};
    seen[t] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t v = queue[i];
      for (std::size_t b : adj_[v]) {
        // Partner arc enters v; positive residual lets its tail step here.
        std::size_t u = arcs_[b].to;
        if (arcs_[b ^ 1].res > 0 && !seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      }
    }
    return seen;
  }

  struct PeeledPath {
    std::vector<std::size_t> vertices;  // s ... t inclusive
    Cap capacity;
  };

  // Peels source-to-sink paths from the net flow, cancelling any flow
  // cycle met along the walk. Path capacities sum to the flow value and
  // at most one path is emitted per arc: remaining net flow only ever
  // decreases, so per-vertex cursors never rewind.
  std::vector<PeeledPath> peel_paths(std::size_t s, std::size_t t) {
    std::vector<Cap> rem(arcs_.size(), Cap(0));
    for (std::size_t a = 0; a < arcs_.size(); a += 2) {
      Cap nf = net_flow(a);
      if (nf > 0)
        rem[a] = nf;
      else if (nf < 0)
        rem[a ^ 1] = -nf;
    }

    std::vector<PeeledPath> out;
    std::vector<std::size_t> cursor(adj_.size(), 0);
    std::vector<int> on_path(adj_.size(), -1);
    auto next_arc = [&](std::size_t v) -> std::size_t {
      auto& cur = cursor[v];
      while (cur < adj_[v].size() && rem[adj_[v][cur]] == 0) ++cur;
      return cur < adj_[v].size() ? adj_[v][cur] : SIZE_MAX;
    };

    while (true) {
      std::vector<std::size_t> path_vertices{s};
      std::vector<std::size_t> path_arcs;
      on_path.assign(adj_.size(), -1);
      on_path[s] = 0;
      std::size_t v = s;
      bool done = false;
      while (v != t) {
        std::size_t a = next_arc(v);
        if (a == SIZE_MAX) {
          check_internal(v == s, "flow decomposition stuck before the sink");
          done = true;  // source drained; leftover positive arcs are cycles
          break;
        }
        std::size_t w = arcs_[a].to;
        if (on_path[w] >= 0) {
          // Cancel the loop and resume from its entry point.
          std::size_t k = static_cast<std::size_t>(on_path[w]);
          Cap c = rem[a];
          for (std::size_t i = k; i < path_arcs.size(); ++i)
            c = std::min(c, rem[path_arcs[i]]);
          rem[a] -= c;
          for (std::size_t i = k; i < path_arcs.size(); ++i)
            rem[path_arcs[i]] -= c;
          for (std::size_t i = k + 1; i < path_vertices.size(); ++i)
            on_path[path_vertices[i]] = -1;
          path_vertices.resize(k + 1);
          path_arcs.resize(k);
          v = w;
          continue;
        }
        path_arcs.push_back(a);
        on_path[w] = static_cast<int>(path_vertices.size());
        path_vertices.push_back(w);
        v = w;
      }
      if (done) break;
      Cap cap = rem[path_arcs[0]];
      for (std::size_t a : path_arcs) cap = std::min(cap, rem[a]);
      for (std::size_t a : path_arcs) rem[a] -= cap;
      out.push_back({std::move(path_vertices), cap});
    }
    return out;
  }

private:
  struct Arc {
    std::size_t to;
    Cap res;
  };

  std::size_t add_pair(std::size_t u, std::size_t v, Cap fwd, Cap bwd) {
    std::size_t id = arcs_.size();
    arcs_.push_back({v, fwd});
    arcs_.push_back({u, bwd});
    caps_.push_back(fwd);
    caps_.push_back(bwd);
    adj_[u].push_back(id);
    adj_[v].push_back(id + 1);
    return id;
  }

  bool bfs(std::size_t s, std::size_t t) {
    level_.assign(adj_.size(), -1);
    std::vector<std::size_t> queue{s};
    level_[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t v = queue[i];
      for (std::size_t a : adj_[v]) {
        if (arcs_[a].res > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Cap dfs(std::size_t v, std::size_t t, Cap limit) {
    if (v == t) return limit;
    for (auto& i = iter_[v]; i < adj_[v].size(); ++i) {
      std::size_t a = adj_[v][i];
      Arc& arc = arcs_[a];
      if (arc.res > 0 && level_[arc.to] == level_[v] + 1) {
        Cap pass = limit < 0 ? arc.res : std::min(limit, arc.res);
        Cap got = dfs(arc.to, t, pass);
        if (got > 0) {
          arc.res -= got;
          arcs_[a ^ 1].res += got;
          return got;
        }
      }
    }
    return Cap(0);
  }

  std::vector<Arc> arcs_;
  std::vector<Cap> caps_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace stc::detail
