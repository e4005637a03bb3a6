#include "steinercut/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "steinercut/error.hpp"

namespace stc {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
  fail_parse("line " + std::to_string(line_no) + ": " + msg);
}

std::int64_t require_param(const GenSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end())
    fail_invalid("generator '" + spec.family + "' needs parameter '" + key + "'");
  return it->second;
}

std::int64_t param_or(const GenSpec& spec, const std::string& key,
                      std::int64_t fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

VertexSet random_terminals(std::size_t n, std::size_t count, Rng& rng) {
  if (count > n) fail_invalid("more terminals than vertices");
  VertexSet t(n);
  std::size_t placed = 0;
  while (placed < count) {
    std::size_t v = rng.below(n);
    if (!t.contains(v)) {
      t.insert(v);
      ++placed;
    }
  }
  return t;
}

}  // namespace

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<char> terminal_seen;
  VertexSet terminals(0);

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank
    if (tag == "c") continue;    // comment
    if (tag == "p") {
      if (have_header) parse_fail(line_no, "duplicate problem line");
      std::string kind;
      long long pn = 0, pm = 0;
      if (!(ls >> kind >> pn >> pm) || kind != "steiner")
        parse_fail(line_no, "expected 'p steiner <n> <m>'");
      if (pn < 1 || pm < 0) parse_fail(line_no, "invalid problem sizes");
      n = static_cast<std::size_t>(pn);
      m = static_cast<std::size_t>(pm);
      terminal_seen.assign(n, 0);
      terminals = VertexSet(n);
      have_header = true;
      continue;
    }
    if (!have_header) parse_fail(line_no, "data before the problem line");
    if (tag == "e") {
      long long u = 0, v = 0, w = 0;
      if (!(ls >> u >> v >> w)) parse_fail(line_no, "malformed edge line");
      if (u < 1 || v < 1 || u > static_cast<long long>(n) ||
          v > static_cast<long long>(n))
        parse_fail(line_no, "edge endpoint out of range");
      if (u == v) parse_fail(line_no, "self-loops are not allowed");
      if (w <= 0) parse_fail(line_no, "edge weight must be positive");
      if (w > kDefaultMaxWeight) parse_fail(line_no, "edge weight above bound");
      edges.push_back({static_cast<VertexId>(u - 1),
                       static_cast<VertexId>(v - 1), static_cast<Weight>(w)});
      continue;
    }
    if (tag == "t") {
      long long v = 0;
      if (!(ls >> v)) parse_fail(line_no, "malformed terminal line");
      if (v < 1 || v > static_cast<long long>(n))
        parse_fail(line_no, "terminal out of range");
      if (terminal_seen[static_cast<std::size_t>(v - 1)])
        parse_fail(line_no, "duplicate terminal declaration");
      terminal_seen[static_cast<std::size_t>(v - 1)] = 1;
      terminals.insert(static_cast<std::size_t>(v - 1));
      continue;
    }
    parse_fail(line_no, "unknown line type '" + tag + "'");
  }
  if (!have_header) fail_parse("missing problem line");
  if (edges.size() != m)
    fail_parse("edge count " + std::to_string(edges.size()) +
               " does not match the declared " + std::to_string(m));
  return Graph(n, std::move(edges), std::move(terminals));
}

std::string emit_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p steiner " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges())
    out << "e " << (e.u + 1) << " " << (e.v + 1) << " " << e.w << "\n";
  for (VertexId v : g.terminals().to_vector()) out << "t " << (v + 1) << "\n";
  return out.str();
}

Graph load_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_parse("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str());
}

namespace {

Generated gen_dumbbell(const GenSpec& spec) {
  std::int64_t size = param_or(spec, "size", 3);
  Weight bridge_w = param_or(spec, "bridge_w", 1);
  Weight inside_w = param_or(spec, "inside_w", 1);
  if (size < 2 || bridge_w < 1 || inside_w < 1)
    fail_invalid("dumbbell needs size >= 2 and positive weights");
  std::size_t n = static_cast<std::size_t>(2 * size);
  std::vector<Edge> edges;
  for (std::size_t side = 0; side < 2; ++side) {
    std::size_t base = side * size;
    for (std::size_t i = 0; i < static_cast<std::size_t>(size); ++i)
      for (std::size_t j = i + 1; j < static_cast<std::size_t>(size); ++j)
        edges.push_back({base + i, base + j, inside_w});
  }
  edges.push_back({0, static_cast<std::size_t>(size), bridge_w});
  VertexSet terms(n);
  terms.insert(static_cast<std::size_t>(size) - 1);
  terms.insert(n - 1);
  Weight internal_cut = (size - 1) * inside_w;
  return {Graph(n, std::move(edges), std::move(terms)),
          std::min(bridge_w, internal_cut)};
}

Generated gen_clique(const GenSpec& spec) {
  std::int64_t n64 = require_param(spec, "n");
  Weight w = param_or(spec, "w", 1);
  if (n64 < 2 || w < 1) fail_invalid("clique needs n >= 2 and w >= 1");
  std::size_t n = static_cast<std::size_t>(n64);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, w});
  return {Graph(n, std::move(edges), VertexSet::full(n)),
          static_cast<Weight>((n64 - 1) * w)};
}

Generated gen_grid(const GenSpec& spec, Rng& rng) {
  std::int64_t rows = require_param(spec, "rows");
  std::int64_t cols = require_param(spec, "cols");
  Weight w_max = param_or(spec, "w_max", 8);
  if (rows < 1 || cols < 1 || w_max < 1) fail_invalid("bad grid parameters");
  std::size_t n = static_cast<std::size_t>(rows * cols);
  std::int64_t t_count = param_or(spec, "t", std::max<std::int64_t>(2, rows));
  std::vector<Edge> edges;
  auto id = [&](std::int64_t r, std::int64_t c) {
    return static_cast<std::size_t>(r * cols + c);
  };
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c) {
      Weight w = 1 + static_cast<Weight>(rng.below(w_max));
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), w});
      w = 1 + static_cast<Weight>(rng.below(w_max));
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), w});
    }
  VertexSet terms = random_terminals(n, static_cast<std::size_t>(t_count), rng);
  return {Graph(n, std::move(edges), std::move(terms)), std::nullopt};
}

Generated gen_random_gnm(const GenSpec& spec, Rng& rng) {
  std::int64_t n64 = require_param(spec, "n");
  std::int64_t m64 = require_param(spec, "m");
  Weight w_max = param_or(spec, "w_max", 8);
  if (n64 < 2 || m64 < 0 || w_max < 1) fail_invalid("bad random_gnm parameters");
  std::size_t n = static_cast<std::size_t>(n64);
  std::int64_t t_count = param_or(spec, "t", 2);
  std::vector<Edge> edges;
  for (std::int64_t i = 0; i < m64; ++i) {
    std::size_t u = rng.below(n);
    std::size_t v = rng.below(n);
    while (v == u) v = rng.below(n);
    Weight w = 1 + static_cast<Weight>(rng.below(w_max));
    edges.push_back({u, v, w});
  }
  VertexSet terms = random_terminals(n, static_cast<std::size_t>(t_count), rng);
  return {Graph(n, std::move(edges), std::move(terms)), std::nullopt};
}

// Two internally well-connected halves joined by a bridge of known
// weight. Every cut separating same-side terminals costs at least one
// inside edge, so the bridge is the unique minimum when inside_w is
// larger than cut_w.
Generated gen_planted_cut(const GenSpec& spec, Rng& rng) {
  std::int64_t n64 = require_param(spec, "n");
  Weight cut_w = param_or(spec, "cut_w", 3);
  Weight inside_w = param_or(spec, "inside_w", 10);
  if (n64 < 4 || cut_w < 1 || inside_w < 1)
    fail_invalid("bad planted_cut parameters");
  std::size_t n = static_cast<std::size_t>(n64);
  std::size_t half = n / 2;
  std::int64_t t_count = param_or(spec, "t", static_cast<std::int64_t>(n / 2));
  if (t_count < 2 || static_cast<std::size_t>(t_count) > n - 2)
    fail_invalid("planted_cut terminal count out of range");

  std::vector<Edge> edges;
  auto inside_weight = [&]() {
    return inside_w + static_cast<Weight>(rng.below(
                          static_cast<std::uint64_t>(inside_w) / 2 + 1));
  };
  auto build_side = [&](std::size_t base, std::size_t count) {
    // Random spanning tree, then one extra edge per vertex.
    for (std::size_t i = 1; i < count; ++i) {
      std::size_t p = rng.below(i);
      edges.push_back({base + i, base + p, inside_weight()});
    }
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t j = rng.below(count);
      while (j == i) j = rng.below(count);
      edges.push_back({base + i, base + j, inside_weight()});
    }
  };
  build_side(0, half);
  build_side(half, n - half);
  edges.push_back({0, half, cut_w});

  // Terminals split evenly, bridge endpoints excluded.
  std::size_t per_side = static_cast<std::size_t>(t_count) / 2;
  std::size_t extra = static_cast<std::size_t>(t_count) - 2 * per_side;
  VertexSet terms(n);
  auto place = [&](std::size_t base, std::size_t count, std::size_t want) {
    std::size_t placed = 0;
    while (placed < want) {
      std::size_t v = base + 1 + rng.below(count - 1);  // skip the endpoint
      if (!terms.contains(v)) {
        terms.insert(v);
        ++placed;
      }
    }
  };
  place(0, half, per_side);
  place(half, n - half, per_side + extra);

  std::optional<Weight> lambda;
  if (inside_w > cut_w) lambda = cut_w;
  return {Graph(n, std::move(edges), std::move(terms)), lambda};
}

}  // namespace

Generated generate(const GenSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  if (spec.family == "dumbbell") return gen_dumbbell(spec);
  if (spec.family == "clique") return gen_clique(spec);
  if (spec.family == "grid") return gen_grid(spec, rng);
  if (spec.family == "random_gnm") return gen_random_gnm(spec, rng);
  if (spec.family == "planted_cut") return gen_planted_cut(spec, rng);
  fail_invalid("unknown generator family '" + spec.family + "'");
}

}  // namespace stc
