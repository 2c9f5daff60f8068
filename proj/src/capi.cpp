#include "respcut/respcut.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "respcut/gamma.hpp"
#include "respcut/generators.hpp"
#include "respcut/harness.hpp"
#include "respcut/io.hpp"

using namespace respcut;

struct rc_graph {
  std::shared_ptr<const Graph> graph;
};

struct rc_tree {
  std::shared_ptr<const Graph> graph;
  std::shared_ptr<const RootedSpanningTree> tree;
};

struct rc_engine {
  std::shared_ptr<const Graph> graph;
  std::shared_ptr<const RootedSpanningTree> tree;
  std::unique_ptr<GammaEngine> engine;
};

namespace {

thread_local std::string last_error;
thread_local std::optional<std::uint64_t> last_detail;

rc_status fail(rc_status status, std::string message,
               std::optional<std::uint64_t> detail = std::nullopt) {
  last_error = std::move(message);
  last_detail = detail;
  return status;
}

template <class F>
rc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    last_detail.reset();
    return RC_OK;
  } catch (const Error& err) {
    std::optional<std::uint64_t> detail;
    if (err.detail()) detail = *err.detail();
    return fail(static_cast<rc_status>(err.code()), err.what(), detail);
  } catch (const std::bad_alloc&) {
    return fail(RC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& err) {
    return fail(RC_ERR_INTERNAL, err.what());
  } catch (...) {
    return fail(RC_ERR_INTERNAL, "unknown failure");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

std::span<const Vertex> ids(const uint32_t* data, size_t len) {
  if (len > 0) require(data, "id array");
  return {data, len};
}

VertexSet side_set(const Graph& g, const uint32_t* side, size_t len) {
  VertexSet out(g.vertex_count());
  for (auto v : ids(side, len)) {
    if (v >= g.vertex_count())
      throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " out of range");
    out.insert(v);
  }
  return out;
}

rc_gamma_case to_c(const GammaCase& c) {
  return rc_gamma_case{static_cast<rc_case_tag>(c.tag), c.deepest, c.shallowest, c.eliminated};
}

TreeStrategy to_strategy(rc_tree_strategy s) {
  switch (s) {
    case RC_TREE_BFS: return TreeStrategy::kBfs;
    case RC_TREE_DFS: return TreeStrategy::kDfs;
    case RC_TREE_UNIFORM: return TreeStrategy::kUniform;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown tree strategy");
}

rc_tree* wrap_tree(const rc_graph* graph, RootedSpanningTree tree) {
  return new rc_tree{graph->graph, std::make_shared<const RootedSpanningTree>(std::move(tree))};
}

}  // namespace

extern "C" {

const char* rc_last_error(void) { return last_error.c_str(); }

int rc_last_error_detail(uint64_t* detail) {
  if (!last_detail) return 0;
  if (detail != nullptr) *detail = *last_detail;
  return 1;
}

const char* rc_status_name(rc_status status) {
  switch (status) {
    case RC_OK: return "ok";
    case RC_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case RC_ERR_INTERNAL: return "internal";
    default: return error_code_name(static_cast<ErrorCode>(status));
  }
}

const char* rc_case_name(rc_case_tag tag) {
  return case_name(static_cast<GammaCaseTag>(tag)).data();
}

rc_status rc_max_k_from_environment(size_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = max_k_from_environment();
  });
}

rc_status rc_parse_vertex_list(const char* arg, uint32_t* out_ids, size_t capacity, size_t* len) {
  rc_status status = RC_OK;
  const auto outer = guarded([&] {
    require(arg, "arg");
    require(len, "len");
    const auto list = vertex_list_argument(arg);
    *len = list.size();
    if (capacity < list.size()) {
      status = RC_ERR_BUFFER_TOO_SMALL;
      return;
    }
    if (!list.empty()) require(out_ids, "ids");
    std::memcpy(out_ids, list.data(), list.size() * sizeof(uint32_t));
  });
  if (outer != RC_OK) return outer;
  if (status != RC_OK) return fail(status, "vertex list needs " + std::to_string(*len) + " entries");
  return RC_OK;
}

rc_status rc_graph_create(size_t n, const rc_edge* edges, size_t m, rc_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (m > 0) require(edges, "edges");
    std::vector<EdgeSpec> specs(m);
    for (size_t i = 0; i < m; ++i) specs[i] = EdgeSpec{edges[i].u, edges[i].v, edges[i].weight};
    *out = new rc_graph{std::make_shared<const Graph>(n, specs)};
  });
}

rc_status rc_graph_load(const char* path, rc_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new rc_graph{std::make_shared<const Graph>(load_graph_file(path))};
  });
}

rc_status rc_graph_generate(size_t n, size_t m, uint64_t seed, rc_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new rc_graph{std::make_shared<const Graph>(gen_connected_graph(n, m, seed))};
  });
}

void rc_graph_destroy(rc_graph* graph) { delete graph; }

size_t rc_graph_vertex_count(const rc_graph* graph) {
  return graph == nullptr ? 0 : graph->graph->vertex_count();
}

size_t rc_graph_edge_count(const rc_graph* graph) {
  return graph == nullptr ? 0 : graph->graph->edge_count();
}

rc_status rc_graph_edge(const rc_graph* graph, uint32_t edge_id, rc_edge* out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    if (edge_id >= graph->graph->edge_count())
      throw Error(ErrorCode::kInvalidArgument, "edge id out of range");
    const auto& e = graph->graph->edge(edge_id);
    *out = rc_edge{e.u, e.v, e.weight};
  });
}

rc_status rc_cut_size_direct(const rc_graph* graph, const uint32_t* side, size_t len,
                             uint64_t* out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = cut_size_direct(*graph->graph, side_set(*graph->graph, side, len));
  });
}

rc_status rc_tree_create(const rc_graph* graph, const uint32_t* edge_ids, size_t count,
                         uint32_t root, rc_tree** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = wrap_tree(graph, RootedSpanningTree(*graph->graph, ids(edge_ids, count), root));
  });
}

rc_status rc_tree_from_spec(const rc_graph* graph, const char* spec, uint32_t root, uint64_t seed,
                            rc_tree** out) {
  return guarded([&] {
    require(graph, "graph");
    require(spec, "spec");
    require(out, "out");
    *out = wrap_tree(graph, tree_from_spec(*graph->graph, spec, root, seed));
  });
}

rc_status rc_tree_generate(const rc_graph* graph, uint32_t root, uint64_t seed,
                           rc_tree_strategy strategy, rc_tree** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = wrap_tree(graph, gen_spanning_tree(*graph->graph, root, seed, to_strategy(strategy)));
  });
}

void rc_tree_destroy(rc_tree* tree) { delete tree; }

uint32_t rc_tree_root(const rc_tree* tree) { return tree == nullptr ? RC_NO_VERTEX : tree->tree->root(); }

size_t rc_tree_vertex_count(const rc_tree* tree) {
  return tree == nullptr ? 0 : tree->tree->vertex_count();
}

rc_status rc_tree_depth(const rc_tree* tree, uint32_t v, uint32_t* out) {
  return guarded([&] {
    require(tree, "tree");
    require(out, "out");
    if (v >= tree->tree->vertex_count()) throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
    *out = tree->tree->depth(v);
  });
}

rc_status rc_tree_parent_edge(const rc_tree* tree, uint32_t v, uint32_t* out) {
  return guarded([&] {
    require(tree, "tree");
    require(out, "out");
    *out = tree->tree->parent_edge(v);
  });
}

rc_status rc_tree_is_descendant(const rc_tree* tree, uint32_t u, uint32_t v, int* out) {
  return guarded([&] {
    require(tree, "tree");
    require(out, "out");
    *out = tree->tree->is_descendant(u, v) ? 1 : 0;
  });
}

rc_status rc_tree_is_independent(const rc_tree* tree, uint32_t u, uint32_t v, int* out) {
  return guarded([&] {
    require(tree, "tree");
    require(out, "out");
    *out = tree->tree->is_independent(u, v) ? 1 : 0;
  });
}

rc_status rc_tree_root_path(const rc_tree* tree, uint32_t v, uint32_t* path, size_t capacity,
                            size_t* len) {
  rc_status status = RC_OK;
  const auto outer = guarded([&] {
    require(tree, "tree");
    require(len, "len");
    const auto p = tree->tree->root_path(v);
    *len = p.size();
    if (capacity < p.size()) {
      status = RC_ERR_BUFFER_TOO_SMALL;
      return;
    }
    require(path, "path");
    std::memcpy(path, p.data(), p.size() * sizeof(uint32_t));
  });
  if (outer != RC_OK) return outer;
  if (status != RC_OK) return fail(status, "root path needs " + std::to_string(*len) + " entries");
  return RC_OK;
}

rc_status rc_tree_decompose(const rc_tree* tree, const uint32_t* side, size_t len, uint32_t* basis,
                            size_t capacity, size_t* basis_len, int* complemented) {
  rc_status status = RC_OK;
  const auto outer = guarded([&] {
    require(tree, "tree");
    require(basis_len, "basis_len");
    const auto d = decompose_cut_as_xor_basis(*tree->graph, *tree->tree,
                                              side_set(*tree->graph, side, len));
    *basis_len = d.basis.size();
    if (complemented != nullptr) *complemented = d.complemented ? 1 : 0;
    if (capacity < d.basis.size()) {
      status = RC_ERR_BUFFER_TOO_SMALL;
      return;
    }
    if (!d.basis.empty()) require(basis, "basis");
    std::memcpy(basis, d.basis.data(), d.basis.size() * sizeof(uint32_t));
  });
  if (outer != RC_OK) return outer;
  if (status != RC_OK) return fail(status, "basis needs " + std::to_string(*basis_len) + " entries");
  return RC_OK;
}

rc_status rc_engine_create(const rc_tree* tree, rc_engine** out) {
  return guarded([&] {
    require(tree, "tree");
    require(out, "out");
    auto handle = std::make_unique<rc_engine>();
    handle->graph = tree->graph;
    handle->tree = tree->tree;
    handle->engine = std::make_unique<GammaEngine>(*handle->graph, *handle->tree);
    *out = handle.release();
  });
}

void rc_engine_destroy(rc_engine* engine) { delete engine; }

size_t rc_engine_max_k(const rc_engine* engine) {
  return engine == nullptr ? 0 : engine->engine->max_k();
}

rc_status rc_engine_set_max_k(rc_engine* engine, size_t k) {
  return guarded([&] {
    require(engine, "engine");
    engine->engine->set_max_k(k);
  });
}

rc_status rc_engine_precompute_all_pairs(rc_engine* engine, unsigned threads) {
  return guarded([&] {
    require(engine, "engine");
    engine->engine->table().precompute_all_pairs(threads);
  });
}

rc_status rc_engine_subtree_cut_size(const rc_engine* engine, uint32_t v, uint64_t* out) {
  return guarded([&] {
    require(engine, "engine");
    require(out, "out");
    *out = engine->engine->table().single(v);
  });
}

rc_status rc_engine_pairwise_gamma(const rc_engine* engine, uint32_t x, uint32_t y,
                                   uint64_t* out) {
  return guarded([&] {
    require(engine, "engine");
    require(out, "out");
    *out = engine->engine->table().pair(x, y);
  });
}

rc_status rc_engine_classify(const rc_engine* engine, const uint32_t* set, size_t k,
                             rc_gamma_case* out) {
  return guarded([&] {
    require(engine, "engine");
    require(out, "out");
    *out = to_c(classify_gamma_case(*engine->tree, ids(set, k)));
  });
}

rc_status rc_engine_k_wise_gamma(const rc_engine* engine, const uint32_t* set, size_t k,
                                 uint64_t* out, rc_gamma_case* steps, size_t* step_count) {
  return guarded([&] {
    require(engine, "engine");
    require(out, "out");
    std::vector<GammaCase> trace;
    *out = engine->engine->k_wise_gamma(ids(set, k), steps != nullptr ? &trace : nullptr);
    if (steps != nullptr) {
      for (size_t i = 0; i < trace.size(); ++i) steps[i] = to_c(trace[i]);
      if (step_count != nullptr) *step_count = trace.size();
    }
  });
}

rc_status rc_engine_cut_size(const rc_engine* engine, const uint32_t* set, size_t k,
                             uint64_t* out) {
  return guarded([&] {
    require(engine, "engine");
    require(out, "out");
    *out = engine->engine->k_respecting_cut_size(ids(set, k));
  });
}

rc_status rc_engine_cut_size_of_side(const rc_engine* engine, const uint32_t* side, size_t len,
                                     uint64_t* size, size_t* k) {
  return guarded([&] {
    require(engine, "engine");
    require(size, "size");
    try {
      const auto answer = engine->engine->cut_size_via_tree(side_set(*engine->graph, side, len));
      *size = answer.size;
      if (k != nullptr) *k = answer.basis.size();
    } catch (const Error& err) {
      if (err.code() == ErrorCode::kKLimitExceeded && k != nullptr && err.detail()) *k = *err.detail();
      throw;
    }
  });
}

void rc_selfcheck_options_init(rc_selfcheck_options* options) {
  if (options == nullptr) return;
  const SelfcheckOptions defaults;
  options->max_n = defaults.max_n;
  options->trials = defaults.trials;
  options->random_sets = defaults.random_sets;
  options->max_k = defaults.max_k;
  options->seed = defaults.seed;
}

rc_status rc_selfcheck(const rc_selfcheck_options* options, rc_selfcheck_report* report,
                       char** counterexample) {
  return guarded([&] {
    require(options, "options");
    require(report, "report");
    if (counterexample != nullptr) *counterexample = nullptr;
    SelfcheckOptions opts;
    opts.max_n = options->max_n;
    opts.trials = options->trials;
    opts.random_sets = options->random_sets;
    opts.max_k = options->max_k;
    opts.seed = options->seed;
    const auto result = run_selfcheck(opts);
    *report = rc_selfcheck_report{result.trials, result.checks, result.skipped, result.mismatches};
    if (counterexample != nullptr && !result.counterexample.empty()) {
      auto* copy = static_cast<char*>(std::malloc(result.counterexample.size() + 1));
      if (copy == nullptr) throw std::bad_alloc();
      std::memcpy(copy, result.counterexample.c_str(), result.counterexample.size() + 1);
      *counterexample = copy;
    }
  });
}

void rc_string_free(char* s) { std::free(s); }

void rc_bench_options_init(rc_bench_options* options) {
  if (options == nullptr) return;
  const BenchOptions defaults;
  options->n = defaults.n;
  options->m = defaults.m;
  options->k = defaults.k;
  options->queries = defaults.queries;
  options->seed = defaults.seed;
  options->strategy = RC_TREE_UNIFORM;
}

rc_status rc_bench(const rc_bench_options* options, rc_bench_report* report) {
  return guarded([&] {
    require(options, "options");
    require(report, "report");
    BenchOptions opts;
    opts.n = options->n;
    opts.m = options->m;
    opts.k = options->k;
    opts.queries = options->queries;
    opts.seed = options->seed;
    opts.strategy = to_strategy(options->strategy);
    const auto r = run_bench(opts);
    *report = rc_bench_report{r.generate_ms, r.tree_ms,   r.subtree_cuts_ms, r.pairwise_ms,
                              r.k_wise_ms,   r.cut_size_ms, r.checksum};
  });
}

}  // extern "C"
