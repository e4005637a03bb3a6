/* C interface to the Steiner cut solver library. All entry points
 * return a status code; structured results live behind opaque handles.
 * Strings returned through char** are owned by the caller and freed
 * with stc_string_free. stc_last_error() describes the most recent
 * failure on the calling thread. */

#ifndef STEINERCUT_H
#define STEINERCUT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define STC_API __declspec(dllexport)
#else
#define STC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stc_status {
  STC_OK = 0,
  STC_ERROR_INVALID_ARGUMENT = 1,
  STC_ERROR_PARSE = 2,
  STC_ERROR_CAPACITY = 3,
  STC_ERROR_INTERNAL = 4,
} stc_status;

typedef struct stc_graph stc_graph;
typedef struct stc_options stc_options;
typedef struct stc_result stc_result;
typedef struct stc_decomp stc_decomp;

STC_API const char* stc_last_error(void);
STC_API void stc_string_free(char* s);

/* Graphs ----------------------------------------------------------- */

/* Extended DIMACS text: "p steiner <n> <m>", "e <u> <v> <w>", "t <v>". */
STC_API stc_status stc_graph_parse(const char* dimacs_text, stc_graph** out);

/* family: dumbbell | clique | grid | random_gnm | planted_cut.
 * params_json: flat object of integer parameters, e.g.
 * {"n":30,"cut_w":3,"inside_w":10}. Deterministic in the seed. */
STC_API stc_status stc_graph_generate(const char* family,
                                      const char* params_json, uint64_t seed,
                                      stc_graph** out);

STC_API stc_status stc_graph_emit(const stc_graph* g, char** out_text);
STC_API void stc_graph_free(stc_graph* g);
STC_API size_t stc_graph_vertex_count(const stc_graph* g);
STC_API size_t stc_graph_edge_count(const stc_graph* g);
STC_API size_t stc_graph_terminal_count(const stc_graph* g);
STC_API int64_t stc_graph_total_weight(const stc_graph* g);
/* Planted value recorded by the generator; -1 when unknown. */
STC_API int64_t stc_graph_known_lambda(const stc_graph* g);

/* Solver options ---------------------------------------------------- */

STC_API stc_status stc_options_create(stc_options** out);
STC_API void stc_options_free(stc_options* o);
/* psi must be a dyadic rational in (0,1): den a power of two. */
STC_API stc_status stc_options_set_psi(stc_options* o, int64_t num, int64_t den);
STC_API stc_status stc_options_set_c_l(stc_options* o, int64_t c_l);
STC_API stc_status stc_options_set_c_s(stc_options* o, int64_t c_s);
STC_API stc_status stc_options_set_c_ic(stc_options* o, int64_t c_ic);
STC_API stc_status stc_options_set_brute_cap(stc_options* o, size_t cap);

/* Solvers ------------------------------------------------------------ */

STC_API stc_status stc_min_steiner_cut(const stc_graph* g, const stc_options* o,
                                       stc_result** out);
STC_API stc_status stc_naive_steiner_cut(const stc_graph* g, stc_result** out);
STC_API stc_status stc_brute_steiner_cut(const stc_graph* g, size_t cap,
                                         stc_result** out);

STC_API int64_t stc_result_value(const stc_result* r);
STC_API int stc_result_side_contains(const stc_result* r, size_t vertex);
/* Run statistics as JSON with stable key order. */
STC_API stc_status stc_result_stats_json(const stc_result* r, char** out_text);
STC_API void stc_result_free(stc_result* r);

/* Terminal-strong decomposition -------------------------------------- */

STC_API stc_status stc_terminal_decomp(const stc_graph* g, int64_t delta,
                                       const stc_options* o, stc_decomp** out);
STC_API size_t stc_decomp_cluster_count(const stc_decomp* d);
/* Cluster index of a vertex, or -1 when out of range. */
STC_API int64_t stc_decomp_cluster_of(const stc_decomp* d, size_t vertex);
STC_API int64_t stc_decomp_intercluster_weight(const stc_decomp* d);
/* Verification report as JSON: per-check pass/fail plus details. */
STC_API stc_status stc_decomp_verify_json(const stc_graph* g,
                                          const stc_decomp* d, char** out_text);
STC_API void stc_decomp_free(stc_decomp* d);

/* Flow-call accounting ------------------------------------------------ */

STC_API int64_t stc_flow_calls_individual(void);
STC_API int64_t stc_flow_calls_batched(void);
STC_API void stc_flow_calls_reset(void);

#ifdef __cplusplus
}
#endif

#endif /* STEINERCUT_H */
