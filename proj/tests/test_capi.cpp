#include <doctest.h>

#include <cstring>
#include <string>

#include "steinercut.h"

namespace {

const char* kTriangle = "p steiner 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\nt 1\nt 2\nt 3\n";

}  // namespace

TEST_CASE("parse, solve and free through the C surface") {
  stc_graph* g = nullptr;
  REQUIRE(stc_graph_parse(kTriangle, &g) == STC_OK);
  CHECK(stc_graph_vertex_count(g) == 3);
  CHECK(stc_graph_edge_count(g) == 3);
  CHECK(stc_graph_terminal_count(g) == 3);
  CHECK(stc_graph_total_weight(g) == 3);

  stc_result* r = nullptr;
  REQUIRE(stc_min_steiner_cut(g, nullptr, &r) == STC_OK);
  CHECK(stc_result_value(r) == 2);

  char* stats = nullptr;
  REQUIRE(stc_result_stats_json(r, &stats) == STC_OK);
  std::string s(stats);
  CHECK(s.find("\"result_value\": 2") != std::string::npos);
  CHECK(s.find("\"flow_calls_individual\"") != std::string::npos);
  stc_string_free(stats);

  stc_result_free(r);
  stc_graph_free(g);
}

TEST_CASE("parse errors surface as status codes with messages") {
  stc_graph* g = nullptr;
  CHECK(stc_graph_parse("p steiner 2 1\ne 1 1 5\n", &g) == STC_ERROR_PARSE);
  CHECK(std::strlen(stc_last_error()) > 0);
  CHECK(stc_graph_parse(nullptr, &g) == STC_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("generate, emit, and round-trip") {
  stc_graph* g = nullptr;
  REQUIRE(stc_graph_generate("planted_cut",
                             "{\"n\":20,\"cut_w\":3,\"inside_w\":10}", 3,
                             &g) == STC_OK);
  CHECK(stc_graph_known_lambda(g) == 3);
  char* text = nullptr;
  REQUIRE(stc_graph_emit(g, &text) == STC_OK);
  stc_graph* back = nullptr;
  REQUIRE(stc_graph_parse(text, &back) == STC_OK);
  CHECK(stc_graph_vertex_count(back) == stc_graph_vertex_count(g));
  stc_string_free(text);
  stc_graph_free(back);

  stc_result* naive = nullptr;
  REQUIRE(stc_naive_steiner_cut(g, &naive) == STC_OK);
  CHECK(stc_result_value(naive) == 3);
  stc_result_free(naive);
  stc_graph_free(g);
}

TEST_CASE("options validate their inputs") {
  stc_options* o = nullptr;
  REQUIRE(stc_options_create(&o) == STC_OK);
  CHECK(stc_options_set_psi(o, 1, 64) == STC_OK);
  CHECK(stc_options_set_psi(o, 1, 3) == STC_ERROR_INVALID_ARGUMENT);
  CHECK(stc_options_set_psi(o, 5, 4) == STC_ERROR_INVALID_ARGUMENT);
  CHECK(stc_options_set_psi(o, 0, 4) == STC_ERROR_INVALID_ARGUMENT);
  CHECK(stc_options_set_c_l(o, 0) == STC_ERROR_INVALID_ARGUMENT);
  CHECK(stc_options_set_brute_cap(o, 14) == STC_OK);
  stc_options_free(o);
}

TEST_CASE("solvers agree across the C surface") {
  stc_graph* g = nullptr;
  REQUIRE(stc_graph_generate("random_gnm",
                             "{\"n\":10,\"m\":18,\"w_max\":6,\"t\":4}", 11,
                             &g) == STC_OK);
  stc_result *solve = nullptr, *naive = nullptr, *brute = nullptr;
  REQUIRE(stc_min_steiner_cut(g, nullptr, &solve) == STC_OK);
  REQUIRE(stc_naive_steiner_cut(g, &naive) == STC_OK);
  REQUIRE(stc_brute_steiner_cut(g, 22, &brute) == STC_OK);
  CHECK(stc_result_value(solve) == stc_result_value(naive));
  CHECK(stc_result_value(solve) == stc_result_value(brute));
  stc_result_free(solve);
  stc_result_free(naive);
  stc_result_free(brute);
  stc_graph_free(g);
}

TEST_CASE("brute solver reports capacity errors") {
  stc_graph* g = nullptr;
  REQUIRE(stc_graph_generate("random_gnm",
                             "{\"n\":30,\"m\":50,\"w_max\":4,\"t\":4}", 2,
                             &g) == STC_OK);
  stc_result* r = nullptr;
  CHECK(stc_brute_steiner_cut(g, 22, &r) == STC_ERROR_CAPACITY);
  stc_graph_free(g);
}

TEST_CASE("decomposition handles and verification report") {
  stc_graph* g = nullptr;
  REQUIRE(stc_graph_generate("dumbbell", "{\"size\":3,\"bridge_w\":1}", 1, &g) ==
          STC_OK);
  stc_decomp* d = nullptr;
  REQUIRE(stc_terminal_decomp(g, 256, nullptr, &d) == STC_OK);
  CHECK(stc_decomp_cluster_count(d) == 2);
  CHECK(stc_decomp_intercluster_weight(d) == 1);
  CHECK(stc_decomp_cluster_of(d, 0) >= 0);
  char* report = nullptr;
  REQUIRE(stc_decomp_verify_json(g, d, &report) == STC_OK);
  CHECK(std::string(report).find("\"ok\": true") != std::string::npos);
  stc_string_free(report);
  stc_decomp_free(d);
  stc_graph_free(g);
}

TEST_CASE("flow counters are visible and resettable") {
  stc_flow_calls_reset();
  CHECK(stc_flow_calls_individual() == 0);
  stc_graph* g = nullptr;
  REQUIRE(stc_graph_parse(kTriangle, &g) == STC_OK);
  stc_result* r = nullptr;
  REQUIRE(stc_naive_steiner_cut(g, &r) == STC_OK);
  CHECK(stc_flow_calls_individual() == 2);
  CHECK(stc_flow_calls_batched() <= stc_flow_calls_individual());
  stc_result_free(r);
  stc_graph_free(g);
}
