#include "steinercut.h"

#include <chrono>
#include <cstring>
#include <json.hpp>
#include <string>

#include "steinercut/error.hpp"
#include "steinercut/io.hpp"
#include "steinercut/maxflow.hpp"
#include "steinercut/steiner.hpp"
#include "steinercut/terminal_decomp.hpp"

using nlohmann::ordered_json;

struct stc_graph {
  stc::Graph graph;
  std::int64_t known_lambda = -1;
};

struct stc_options {
  stc::SolverOptions opt;
};

struct stc_result {
  stc::SteinerResult res;
  stc::RunStats stats;
  std::string algorithm;
};

struct stc_decomp {
  stc::TerminalDecomposition d;
  std::vector<int> owner;
};

namespace {

thread_local std::string t_last_error;

stc_status status_of(const stc::Error& e) {
  t_last_error = e.what();
  switch (e.code()) {
    case stc::ErrorCode::InvalidArgument:
      return STC_ERROR_INVALID_ARGUMENT;
    case stc::ErrorCode::ParseError:
      return STC_ERROR_PARSE;
    case stc::ErrorCode::Capacity:
      return STC_ERROR_CAPACITY;
    case stc::ErrorCode::Internal:
      return STC_ERROR_INTERNAL;
  }
  return STC_ERROR_INTERNAL;
}

template <typename Fn>
stc_status guarded(Fn&& fn) {
  try {
    fn();
    return STC_OK;
  } catch (const stc::Error& e) {
    return status_of(e);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return STC_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

stc_result* make_result(stc::SteinerResult res, const char* algorithm,
                        std::int64_t calls_before, std::int64_t batched_before,
                        std::int64_t wall_ms) {
  auto* r = new stc_result;
  r->res = std::move(res);
  r->algorithm = algorithm;
  r->stats.flow_calls_individual =
      stc::FlowCounter::instance().individual() - calls_before;
  r->stats.flow_calls_batched_by_level =
      stc::FlowCounter::instance().batched() - batched_before;
  r->stats.rounds_per_game = r->res.rounds_per_game;
  r->stats.recursion_depth = r->res.recursion_depth;
  r->stats.wall_time_ms = wall_ms;
  r->stats.result_value = r->res.value;
  return r;
}

template <typename Fn>
stc_status run_solver(const stc_graph* g, const char* algorithm,
                      stc_result** out, Fn&& solve) {
  if (!g || !out) {
    t_last_error = "null argument";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    std::int64_t before = stc::FlowCounter::instance().individual();
    std::int64_t batched_before = stc::FlowCounter::instance().batched();
    auto start = std::chrono::steady_clock::now();
    stc::SteinerResult res = solve();
    auto end = std::chrono::steady_clock::now();
    std::int64_t ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start)
            .count();
    *out = make_result(std::move(res), algorithm, before, batched_before, ms);
  });
}

}  // namespace

extern "C" {

const char* stc_last_error(void) { return t_last_error.c_str(); }

void stc_string_free(char* s) { std::free(s); }

stc_status stc_graph_parse(const char* dimacs_text, stc_graph** out) {
  if (!dimacs_text || !out) {
    t_last_error = "null argument";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    auto* g = new stc_graph{stc::parse_dimacs(dimacs_text), -1};
    *out = g;
  });
}

stc_status stc_graph_generate(const char* family, const char* params_json,
                              uint64_t seed, stc_graph** out) {
  if (!family || !out) {
    t_last_error = "null argument";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    stc::GenSpec spec;
    spec.family = family;
    if (params_json && std::strlen(params_json) > 0) {
      ordered_json j = ordered_json::parse(params_json, nullptr, false);
      if (j.is_discarded() || !j.is_object())
        stc::fail_parse("generator parameters must be a JSON object");
      for (auto& [key, value] : j.items()) {
        if (!value.is_number_integer())
          stc::fail_parse("generator parameter '" + key + "' must be integer");
        spec.params[key] = value.get<std::int64_t>();
      }
    }
    stc::Generated gen = stc::generate(spec, seed);
    auto* g = new stc_graph{std::move(gen.graph),
                            gen.known_lambda ? *gen.known_lambda : -1};
    *out = g;
  });
}

stc_status stc_graph_emit(const stc_graph* g, char** out_text) {
  if (!g || !out_text) {
    t_last_error = "null argument";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out_text = dup_string(stc::emit_dimacs(g->graph)); });
}

void stc_graph_free(stc_graph* g) { delete g; }

size_t stc_graph_vertex_count(const stc_graph* g) {
  return g ? g->graph.vertex_count() : 0;
}
size_t stc_graph_edge_count(const stc_graph* g) {
  return g ? g->graph.edge_count() : 0;
}
size_t stc_graph_terminal_count(const stc_graph* g) {
  return g ? g->graph.terminal_count() : 0;
}
int64_t stc_graph_total_weight(const stc_graph* g) {
  return g ? g->graph.total_weight() : 0;
}
int64_t stc_graph_known_lambda(const stc_graph* g) {
  return g ? g->known_lambda : -1;
}

stc_status stc_options_create(stc_options** out) {
  if (!out) {
    t_last_error = "null argument";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  *out = new stc_options;
  return STC_OK;
}

void stc_options_free(stc_options* o) { delete o; }

stc_status stc_options_set_psi(stc_options* o, int64_t num, int64_t den) {
  if (!o) {
    t_last_error = "null options";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    if (num <= 0 || den <= 0) stc::fail_invalid("psi must be positive");
    stc::Rational psi{stc::BigInt(num), stc::BigInt(den)};
    if (!psi.is_dyadic())
      stc::fail_invalid("psi denominator must be a power of two");
    if (!(psi < stc::Rational(1))) stc::fail_invalid("psi must be below one");
    o->opt.psi = psi;
  });
}

stc_status stc_options_set_c_l(stc_options* o, int64_t c_l) {
  if (!o || c_l < 1) {
    t_last_error = "c_l must be at least 1";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  o->opt.c_l = c_l;
  return STC_OK;
}

stc_status stc_options_set_c_s(stc_options* o, int64_t c_s) {
  if (!o || c_s < 1) {
    t_last_error = "c_s must be at least 1";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  o->opt.c_s = c_s;
  return STC_OK;
}

stc_status stc_options_set_c_ic(stc_options* o, int64_t c_ic) {
  if (!o || c_ic < 1) {
    t_last_error = "c_ic must be at least 1";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  o->opt.c_ic = c_ic;
  return STC_OK;
}

stc_status stc_options_set_brute_cap(stc_options* o, size_t cap) {
  if (!o || cap < 2) {
    t_last_error = "brute cap must be at least 2";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  o->opt.brute_cap = cap;
  return STC_OK;
}

stc_status stc_min_steiner_cut(const stc_graph* g, const stc_options* o,
                               stc_result** out) {
  stc::SolverOptions opt = o ? o->opt : stc::SolverOptions{};
  return run_solver(g, "solve", out,
                    [&] { return stc::min_steiner_cut(g->graph, opt); });
}

stc_status stc_naive_steiner_cut(const stc_graph* g, stc_result** out) {
  return run_solver(g, "naive", out,
                    [&] { return stc::naive_steiner_cut(g->graph); });
}

stc_status stc_brute_steiner_cut(const stc_graph* g, size_t cap,
                                 stc_result** out) {
  return run_solver(g, "brute", out,
                    [&] { return stc::brute_steiner_cut(g->graph, cap); });
}

int64_t stc_result_value(const stc_result* r) { return r ? r->res.value : -1; }

int stc_result_side_contains(const stc_result* r, size_t vertex) {
  if (!r || vertex >= r->res.best_cut.side.size()) return 0;
  return r->res.best_cut.side.contains(vertex) ? 1 : 0;
}

stc_status stc_result_stats_json(const stc_result* r, char** out_text) {
  if (!r || !out_text) {
    t_last_error = "null argument";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    ordered_json j;
    j["algorithm"] = r->algorithm;
    j["result_value"] = r->stats.result_value;
    j["lambda_guess_used"] = r->res.lambda_guess_used;
    j["flow_calls_individual"] = r->stats.flow_calls_individual;
    j["flow_calls_batched_by_level"] = r->stats.flow_calls_batched_by_level;
    j["rounds_per_game"] = r->stats.rounds_per_game;
    j["recursion_depth"] = r->stats.recursion_depth;
    j["wall_time_ms"] = r->stats.wall_time_ms;
    ordered_json guesses = ordered_json::array();
    for (const auto& it : r->res.iterations) {
      ordered_json gj;
      gj["guess"] = it.guess;
      gj["u_sizes"] = it.u_sizes;
      gj["fallback_naive"] = it.fallback_naive;
      gj["skipped"] = it.skipped;
      guesses.push_back(gj);
    }
    j["iterations"] = guesses;
    *out_text = dup_string(j.dump(2));
  });
}

void stc_result_free(stc_result* r) { delete r; }

stc_status stc_terminal_decomp(const stc_graph* g, int64_t delta,
                               const stc_options* o, stc_decomp** out) {
  if (!g || !out) {
    t_last_error = "null argument";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    stc::SolverOptions opt = o ? o->opt : stc::SolverOptions{};
    stc::DecompOptions dopt;
    dopt.c_l = opt.c_l;
    dopt.c_s = opt.c_s;
    dopt.c_ic = opt.c_ic;
    dopt.brute_cap = opt.brute_cap;
    auto* d = new stc_decomp;
    d->d = stc::terminal_decomp(
        g->graph, stc::VertexSet::full(g->graph.vertex_count()),
        g->graph.terminals(), delta, opt.psi, dopt);
    d->owner.assign(g->graph.vertex_count(), -1);
    for (std::size_t i = 0; i < d->d.clusters.size(); ++i)
      for (std::size_t v : d->d.clusters[i].to_vector())
        d->owner[v] = static_cast<int>(i);
    *out = d;
  });
}

size_t stc_decomp_cluster_count(const stc_decomp* d) {
  return d ? d->d.clusters.size() : 0;
}

int64_t stc_decomp_cluster_of(const stc_decomp* d, size_t vertex) {
  if (!d || vertex >= d->owner.size()) return -1;
  return d->owner[vertex];
}

int64_t stc_decomp_intercluster_weight(const stc_decomp* d) {
  return d ? d->d.intercluster_weight : -1;
}

stc_status stc_decomp_verify_json(const stc_graph* g, const stc_decomp* d,
                                  char** out_text) {
  if (!g || !d || !out_text) {
    t_last_error = "null argument";
    return STC_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    stc::VerifyReport report = stc::verify_decomposition(g->graph, d->d);
    ordered_json j;
    j["ok"] = report.ok;
    ordered_json items = ordered_json::array();
    for (const auto& item : report.items) {
      ordered_json ij;
      ij["check"] = item.check;
      ij["pass"] = item.pass;
      ij["detail"] = item.detail;
      items.push_back(ij);
    }
    j["checks"] = items;
    j["cluster_count"] = d->d.clusters.size();
    j["intercluster_weight"] = d->d.intercluster_weight;
    j["flow_calls_used"] = d->d.flow_calls_used;
    j["recursion_depth"] = d->d.recursion_depth;
    *out_text = dup_string(j.dump(2));
  });
}

void stc_decomp_free(stc_decomp* d) { delete d; }

int64_t stc_flow_calls_individual(void) {
  return stc::FlowCounter::instance().individual();
}

int64_t stc_flow_calls_batched(void) {
  return stc::FlowCounter::instance().batched();
}

void stc_flow_calls_reset(void) { stc::FlowCounter::instance().reset(); }

}  // extern "C"
