/*
 * respcut C API.
 *
 * Sizes of cuts that k-respect a rooted spanning tree, exposed through opaque
 * handles. Every fallible call returns rc_status; on failure a message and an
 * optional numeric detail (offending edge index, line number or k) can be
 * read back with rc_last_error() / rc_last_error_detail() on the same thread.
 *
 * Handles own their dependencies: a tree keeps its graph alive and an engine
 * keeps its tree alive, so handles may be destroyed in any order. Const
 * handles are safe to use from several threads at once.
 */
#ifndef RESPCUT_RESPCUT_H
#define RESPCUT_RESPCUT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RESPCUT_API __declspec(dllexport)
#else
#define RESPCUT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rc_status {
  RC_OK = 0,
  RC_ERR_INVALID_ARGUMENT = 1,
  RC_ERR_ENDPOINT_OUT_OF_RANGE = 2,
  RC_ERR_SELF_LOOP = 3,
  RC_ERR_ZERO_WEIGHT = 4,
  RC_ERR_NOT_SPANNING = 5,
  RC_ERR_ROOT_OUT_OF_RANGE = 6,
  RC_ERR_ROOT_IN_QUERY = 7,
  RC_ERR_DUPLICATE_VERTEX = 8,
  RC_ERR_EMPTY_QUERY = 9,
  RC_ERR_K_LIMIT = 10,
  RC_ERR_DISCONNECTED = 11,
  RC_ERR_UNIVERSE_MISMATCH = 12,
  RC_ERR_PARSE = 13,
  RC_ERR_IO = 14,
  RC_ERR_BUFFER_TOO_SMALL = 15,
  RC_ERR_INTERNAL = 99
} rc_status;

typedef enum rc_tree_strategy {
  RC_TREE_BFS = 0,
  RC_TREE_DFS = 1,
  RC_TREE_UNIFORM = 2
} rc_tree_strategy;

typedef enum rc_case_tag {
  RC_BASE_SINGLE = 0,
  RC_BASE_PAIR = 1,
  RC_CASE1 = 2, /* all members independent: value 0 */
  RC_CASE2 = 3, /* chain: gamma(deepest, shallowest) */
  RC_CASE3 = 4, /* branching under a common ancestor: value 0 */
  RC_CASE4 = 5  /* drop `eliminated` and recurse */
} rc_case_tag;

#define RC_NO_VERTEX UINT32_MAX

typedef struct rc_edge {
  uint32_t u;
  uint32_t v;
  uint64_t weight;
} rc_edge;

typedef struct rc_gamma_case {
  rc_case_tag tag;
  uint32_t deepest;    /* RC_CASE2, else RC_NO_VERTEX */
  uint32_t shallowest; /* RC_CASE2, else RC_NO_VERTEX */
  uint32_t eliminated; /* RC_CASE4, else RC_NO_VERTEX */
} rc_gamma_case;

typedef struct rc_graph rc_graph;
typedef struct rc_tree rc_tree;
typedef struct rc_engine rc_engine;

RESPCUT_API const char* rc_last_error(void);
/* Returns 1 and stores the detail when the last error carried one. */
RESPCUT_API int rc_last_error_detail(uint64_t* detail);
RESPCUT_API const char* rc_status_name(rc_status status);
/* "BASE_SINGLE", "BASE_PAIR", "CASE1" .. "CASE4". */
RESPCUT_API const char* rc_case_name(rc_case_tag tag);
/* k limit from RESPECTING_CUTS_MAX_K (default 16). */
RESPCUT_API rc_status rc_max_k_from_environment(size_t* out);

/* Parses ids separated by commas/whitespace (`#` comments), or the contents
 * of a file when arg is "@path". Buffer protocol as rc_tree_root_path. */
RESPCUT_API rc_status rc_parse_vertex_list(const char* arg, uint32_t* ids, size_t capacity,
                                           size_t* len);

/* ---- graphs ---- */

RESPCUT_API rc_status rc_graph_create(size_t n, const rc_edge* edges, size_t m, rc_graph** out);
RESPCUT_API rc_status rc_graph_load(const char* path, rc_graph** out);
RESPCUT_API rc_status rc_graph_generate(size_t n, size_t m, uint64_t seed, rc_graph** out);
RESPCUT_API void rc_graph_destroy(rc_graph* graph);
RESPCUT_API size_t rc_graph_vertex_count(const rc_graph* graph);
RESPCUT_API size_t rc_graph_edge_count(const rc_graph* graph);
RESPCUT_API rc_status rc_graph_edge(const rc_graph* graph, uint32_t edge_id, rc_edge* out);
/* Weight of the edges with exactly one endpoint among side[0..len). */
RESPCUT_API rc_status rc_cut_size_direct(const rc_graph* graph, const uint32_t* side, size_t len,
                                         uint64_t* out);

/* ---- rooted spanning trees ---- */

RESPCUT_API rc_status rc_tree_create(const rc_graph* graph, const uint32_t* edge_ids,
                                     size_t count, uint32_t root, rc_tree** out);
/* spec: "bfs", "dfs", "uniform", "u,v;u,v;..." or "@path". */
RESPCUT_API rc_status rc_tree_from_spec(const rc_graph* graph, const char* spec, uint32_t root,
                                        uint64_t seed, rc_tree** out);
RESPCUT_API rc_status rc_tree_generate(const rc_graph* graph, uint32_t root, uint64_t seed,
                                       rc_tree_strategy strategy, rc_tree** out);
RESPCUT_API void rc_tree_destroy(rc_tree* tree);
RESPCUT_API uint32_t rc_tree_root(const rc_tree* tree);
RESPCUT_API size_t rc_tree_vertex_count(const rc_tree* tree);
RESPCUT_API rc_status rc_tree_depth(const rc_tree* tree, uint32_t v, uint32_t* out);
RESPCUT_API rc_status rc_tree_parent_edge(const rc_tree* tree, uint32_t v, uint32_t* out);
RESPCUT_API rc_status rc_tree_is_descendant(const rc_tree* tree, uint32_t u, uint32_t v,
                                            int* out);
RESPCUT_API rc_status rc_tree_is_independent(const rc_tree* tree, uint32_t u, uint32_t v,
                                             int* out);
/* Writes root..v. On RC_ERR_BUFFER_TOO_SMALL, *len holds the required size. */
RESPCUT_API rc_status rc_tree_root_path(const rc_tree* tree, uint32_t v, uint32_t* path,
                                        size_t capacity, size_t* len);
/* Subtree basis of the cut of side[0..len); same buffer protocol as above. */
RESPCUT_API rc_status rc_tree_decompose(const rc_tree* tree, const uint32_t* side, size_t len,
                                        uint32_t* basis, size_t capacity, size_t* basis_len,
                                        int* complemented);

/* ---- gamma engine ---- */

/* The k limit starts at rc_max_k_from_environment(). */
RESPCUT_API rc_status rc_engine_create(const rc_tree* tree, rc_engine** out);
RESPCUT_API void rc_engine_destroy(rc_engine* engine);
RESPCUT_API size_t rc_engine_max_k(const rc_engine* engine);
RESPCUT_API rc_status rc_engine_set_max_k(rc_engine* engine, size_t k);
RESPCUT_API rc_status rc_engine_precompute_all_pairs(rc_engine* engine, unsigned threads);
RESPCUT_API rc_status rc_engine_subtree_cut_size(const rc_engine* engine, uint32_t v,
                                                 uint64_t* out);
RESPCUT_API rc_status rc_engine_pairwise_gamma(const rc_engine* engine, uint32_t x, uint32_t y,
                                               uint64_t* out);
RESPCUT_API rc_status rc_engine_classify(const rc_engine* engine, const uint32_t* set, size_t k,
                                         rc_gamma_case* out);
/* steps may be NULL; otherwise it needs room for k entries and *step_count
 * receives the number of classification steps taken. */
RESPCUT_API rc_status rc_engine_k_wise_gamma(const rc_engine* engine, const uint32_t* set,
                                             size_t k, uint64_t* out, rc_gamma_case* steps,
                                             size_t* step_count);
/* Size of the cut whose crossing tree edges are the parent edges of set. */
RESPCUT_API rc_status rc_engine_cut_size(const rc_engine* engine, const uint32_t* set, size_t k,
                                         uint64_t* out);
/* Size of the cut of an explicit side through the tree. *k receives the
 * basis size, also when RC_ERR_K_LIMIT is returned. */
RESPCUT_API rc_status rc_engine_cut_size_of_side(const rc_engine* engine, const uint32_t* side,
                                                 size_t len, uint64_t* size, size_t* k);

/* ---- verification and benchmarks ---- */

typedef struct rc_selfcheck_options {
  size_t max_n;
  size_t trials;
  size_t random_sets;
  size_t max_k;
  uint64_t seed;
} rc_selfcheck_options;

typedef struct rc_selfcheck_report {
  size_t trials;
  size_t checks;
  size_t skipped;
  size_t mismatches;
} rc_selfcheck_report;

RESPCUT_API void rc_selfcheck_options_init(rc_selfcheck_options* options);
/* *counterexample (may be NULL) receives a JSON object on mismatch, else
 * NULL; release it with rc_string_free. */
RESPCUT_API rc_status rc_selfcheck(const rc_selfcheck_options* options,
                                   rc_selfcheck_report* report, char** counterexample);
RESPCUT_API void rc_string_free(char* s);

typedef struct rc_bench_options {
  size_t n;
  size_t m;
  size_t k;
  size_t queries;
  uint64_t seed;
  rc_tree_strategy strategy;
} rc_bench_options;

typedef struct rc_bench_report {
  double generate_ms;
  double tree_ms;
  double subtree_cuts_ms;
  double pairwise_ms;
  double k_wise_ms;
  double cut_size_ms;
  uint64_t checksum;
} rc_bench_report;

RESPCUT_API void rc_bench_options_init(rc_bench_options* options);
RESPCUT_API rc_status rc_bench(const rc_bench_options* options, rc_bench_report* report);

#ifdef __cplusplus
}
#endif

#endif /* RESPCUT_RESPCUT_H */
