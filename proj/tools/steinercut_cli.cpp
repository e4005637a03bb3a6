// Command-line front end. Talks to the solver library exclusively
// through the C interface in steinercut.h.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "steinercut.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;

int exit_code_for(stc_status status) {
  switch (status) {
    case STC_OK:
      return kExitOk;
    case STC_ERROR_PARSE:
      return kExitParse;
    case STC_ERROR_INTERNAL:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

[[noreturn]] void die(stc_status status) {
  std::cerr << "error: " << stc_last_error() << "\n";
  std::exit(exit_code_for(status));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(kExitParse);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct PsiValue {
  std::int64_t num = 1;
  std::int64_t den = 64;
};

PsiValue parse_psi(const std::string& text) {
  PsiValue psi;
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      psi.num = std::stoll(text);
      psi.den = 1;
    } else {
      psi.num = std::stoll(text.substr(0, slash));
      psi.den = std::stoll(text.substr(slash + 1));
    }
  } catch (const std::exception&) {
    std::cerr << "error: psi must look like 'num/den'\n";
    std::exit(kExitUsage);
  }
  return psi;
}

struct CommonOptions {
  std::string psi = "1/64";
  std::int64_t c_l = 4;
  std::int64_t c_s = 1;
  std::int64_t c_ic = 8;
  std::size_t brute_cap = 22;
};

stc_options* build_options(const CommonOptions& c) {
  stc_options* o = nullptr;
  if (stc_options_create(&o) != STC_OK) die(STC_ERROR_INTERNAL);
  PsiValue psi = parse_psi(c.psi);
  stc_status st = stc_options_set_psi(o, psi.num, psi.den);
  if (st != STC_OK) die(st);
  if ((st = stc_options_set_c_l(o, c.c_l)) != STC_OK) die(st);
  if ((st = stc_options_set_c_s(o, c.c_s)) != STC_OK) die(st);
  if ((st = stc_options_set_c_ic(o, c.c_ic)) != STC_OK) die(st);
  if ((st = stc_options_set_brute_cap(o, c.brute_cap)) != STC_OK) die(st);
  return o;
}

stc_graph* load_graph(const std::string& path) {
  std::string text = read_file(path);
  stc_graph* g = nullptr;
  stc_status st = stc_graph_parse(text.c_str(), &g);
  if (st != STC_OK) die(st);
  return g;
}

void print_result(const stc_graph* g, stc_result* result,
                  const std::string& stats_path) {
  std::cout << "value " << stc_result_value(result) << "\n";
  std::cout << "side";
  for (std::size_t v = 0; v < stc_graph_vertex_count(g); ++v)
    if (stc_result_side_contains(result, v)) std::cout << " " << (v + 1);
  std::cout << "\n";
  char* stats = nullptr;
  if (stc_result_stats_json(result, &stats) == STC_OK) {
    if (!stats_path.empty()) {
      std::ofstream out(stats_path);
      out << stats << "\n";
    } else {
      std::cout << stats << "\n";
    }
    stc_string_free(stats);
  }
}

std::string params_to_json(const std::vector<std::string>& params) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const std::string& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --param expects key=value\n";
      std::exit(kExitUsage);
    }
    if (!first) out << ",";
    first = false;
    out << "\"" << p.substr(0, eq) << "\":" << p.substr(eq + 1);
  }
  out << "}";
  return out.str();
}

int run_bench(const std::string& family, const std::string& sizes_csv,
              std::uint64_t seed, const CommonOptions& common,
              const std::vector<std::string>& extra_params) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(sizes_csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) sizes.push_back(std::stoull(item));
  if (sizes.empty()) {
    std::cerr << "error: --sizes needs a comma list of vertex counts\n";
    return kExitUsage;
  }

  std::cout << "n,m,terminals,known_lambda,value,flow_calls_individual,"
               "flow_calls_batched,naive_flows,wall_ms\n";
  struct Row {
    std::size_t n, terminals;
    std::int64_t calls;
    std::int64_t total_weight;
  };
  std::vector<Row> rows;
  for (std::size_t n : sizes) {
    std::ostringstream params;
    params << "{\"n\":" << n << ",\"t\":" << n / 2;
    for (const std::string& p : extra_params) {
      auto eq = p.find('=');
      if (eq == std::string::npos) continue;
      params << ",\"" << p.substr(0, eq) << "\":" << p.substr(eq + 1);
    }
    params << "}";
    stc_graph* g = nullptr;
    stc_status st =
        stc_graph_generate(family.c_str(), params.str().c_str(), seed, &g);
    if (st != STC_OK) die(st);

    stc_options* o = build_options(common);
    stc_flow_calls_reset();
    auto start = std::chrono::steady_clock::now();
    stc_result* result = nullptr;
    st = stc_min_steiner_cut(g, o, &result);
    auto end = std::chrono::steady_clock::now();
    if (st != STC_OK) die(st);
    std::int64_t wall =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start)
            .count();
    std::int64_t individual = stc_flow_calls_individual();
    std::int64_t batched = stc_flow_calls_batched();
    std::size_t terminals = stc_graph_terminal_count(g);

    std::cout << n << "," << stc_graph_edge_count(g) << "," << terminals << ","
              << stc_graph_known_lambda(g) << "," << stc_result_value(result)
              << "," << individual << "," << batched << "," << (terminals - 1)
              << "," << wall << "\n";
    rows.push_back({n, terminals, individual, stc_graph_total_weight(g)});
    stc_result_free(result);
    stc_options_free(o);
    stc_graph_free(g);
  }

  // Crossover: first size from which every tested instance stays below
  // the classical |T|-1 flow count.
  std::size_t crossover = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool all_below = true;
    for (std::size_t j = i; j < rows.size(); ++j)
      if (rows[j].calls >=
          static_cast<std::int64_t>(rows[j].terminals) - 1)
        all_below = false;
    if (all_below) {
      crossover = rows[i].n;
      break;
    }
  }
  if (crossover)
    std::cout << "# crossover_n=" << crossover << "\n";
  else
    std::cout << "# crossover_n=none\n";

  double c_f = 0.0;
  for (const Row& r : rows) {
    double lg = std::log2(static_cast<double>(r.n));
    double lw = std::log2(std::max<double>(2.0, static_cast<double>(r.total_weight)));
    c_f = std::max(c_f, static_cast<double>(r.calls) / (lg * lg * lw));
  }
  std::printf("# c_F=%.4f\n", c_f);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic minimum Steiner cut solver"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string input, stats_path, output_path;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* cmd, bool with_input = true) {
    if (with_input)
      cmd->add_option("--input", input, "extended DIMACS input file")
          ->required();
    cmd->add_option("--psi", common.psi, "sparsity parameter, dyadic num/den");
    cmd->add_option("--c-l", common.c_l, "round-bound constant");
    cmd->add_option("--c-s", common.c_s, "strength constant");
    cmd->add_option("--c-ic", common.c_ic, "intercluster bound constant");
    cmd->add_option("--brute-cap", common.brute_cap,
                    "vertex cap for exhaustive checks");
    cmd->add_option("--stats", stats_path, "write run statistics JSON here");
    cmd->add_option("--seed", seed, "generator seed");
  };

  auto* solve = app.add_subcommand("solve", "minimum Steiner cut");
  add_common(solve);
  auto* naive = app.add_subcommand("naive", "classical |T|-1 flow baseline");
  add_common(naive);
  auto* brute = app.add_subcommand("brute", "all-cuts oracle (capped)");
  add_common(brute);

  std::int64_t delta = 0;
  auto* decompose =
      app.add_subcommand("decompose", "terminal-strong decomposition");
  add_common(decompose);
  decompose->add_option("--delta", delta, "cut size parameter")->required();

  std::string family = "planted_cut";
  std::vector<std::string> gen_params;
  auto* gen = app.add_subcommand("gen", "emit a generated graph");
  gen->add_option("--family", family,
                  "dumbbell|clique|grid|random_gnm|planted_cut")
      ->required();
  gen->add_option("--param", gen_params, "generator parameter key=value");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--output", output_path, "output file (default stdout)");

  std::string sizes_csv = "50,100,200";
  auto* bench = app.add_subcommand("bench", "flow-call counts across sizes");
  bench->add_option("--family", family, "generator family");
  bench->add_option("--sizes", sizes_csv, "comma list of vertex counts");
  bench->add_option("--param", gen_params, "generator parameter key=value");
  bench->add_option("--seed", seed, "generator seed");
  bench->add_option("--psi", common.psi, "sparsity parameter");
  bench->add_option("--c-l", common.c_l, "round-bound constant");
  bench->add_option("--c-s", common.c_s, "strength constant");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed() || naive->parsed() || brute->parsed()) {
    stc_graph* g = load_graph(input);
    stc_options* o = build_options(common);
    stc_result* result = nullptr;
    stc_status st;
    if (solve->parsed())
      st = stc_min_steiner_cut(g, o, &result);
    else if (naive->parsed())
      st = stc_naive_steiner_cut(g, &result);
    else
      st = stc_brute_steiner_cut(g, common.brute_cap, &result);
    if (st != STC_OK) die(st);
    print_result(g, result, stats_path);
    stc_result_free(result);
    stc_options_free(o);
    stc_graph_free(g);
    return kExitOk;
  }

  if (decompose->parsed()) {
    stc_graph* g = load_graph(input);
    stc_options* o = build_options(common);
    stc_decomp* d = nullptr;
    stc_status st = stc_terminal_decomp(g, delta, o, &d);
    if (st != STC_OK) die(st);
    std::size_t count = stc_decomp_cluster_count(d);
    std::cout << "clusters " << count << "\n";
    for (std::size_t c = 0; c < count; ++c) {
      std::cout << "cluster " << c << ":";
      for (std::size_t v = 0; v < stc_graph_vertex_count(g); ++v)
        if (stc_decomp_cluster_of(d, v) == static_cast<std::int64_t>(c))
          std::cout << " " << (v + 1);
      std::cout << "\n";
    }
    std::cout << "intercluster_weight " << stc_decomp_intercluster_weight(d)
              << "\n";
    char* report = nullptr;
    st = stc_decomp_verify_json(g, d, &report);
    if (st != STC_OK) die(st);
    std::cout << report << "\n";
    bool ok = std::string(report).find("\"ok\": true") != std::string::npos;
    stc_string_free(report);
    stc_decomp_free(d);
    stc_options_free(o);
    stc_graph_free(g);
    return ok ? kExitOk : kExitInternal;
  }

  if (gen->parsed()) {
    std::string params_json = params_to_json(gen_params);
    stc_graph* g = nullptr;
    stc_status st =
        stc_graph_generate(family.c_str(), params_json.c_str(), seed, &g);
    if (st != STC_OK) die(st);
    char* text = nullptr;
    if ((st = stc_graph_emit(g, &text)) != STC_OK) die(st);
    if (output_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output_path);
      out << text;
    }
    if (stc_graph_known_lambda(g) >= 0)
      std::cerr << "known lambda: " << stc_graph_known_lambda(g) << "\n";
    stc_string_free(text);
    stc_graph_free(g);
    return kExitOk;
  }

  if (bench->parsed())
    return run_bench(family, sizes_csv, seed, common, gen_params);

  return kExitUsage;
}
