// respcut: command-line front end over the C API.
//
// Every result is one JSON object per line on stdout. Exit status is 0 on
// success, 1 when a verification run finds a mismatch, 2 on bad input.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "respcut/respcut.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct InputError {
  std::string message;
};

void check(rc_status status) {
  if (status != RC_OK)
    throw InputError{std::string(rc_status_name(status)) + ": " + rc_last_error()};
}

struct GraphDeleter {
  void operator()(rc_graph* g) const { rc_graph_destroy(g); }
};
struct TreeDeleter {
  void operator()(rc_tree* t) const { rc_tree_destroy(t); }
};
struct EngineDeleter {
  void operator()(rc_engine* e) const { rc_engine_destroy(e); }
};
using GraphHandle = std::unique_ptr<rc_graph, GraphDeleter>;
using TreeHandle = std::unique_ptr<rc_tree, TreeDeleter>;
using EngineHandle = std::unique_ptr<rc_engine, EngineDeleter>;

std::vector<uint32_t> vertex_list(const std::string& arg) {
  size_t len = 0;
  const auto status = rc_parse_vertex_list(arg.c_str(), nullptr, 0, &len);
  if (status != RC_OK && status != RC_ERR_BUFFER_TOO_SMALL) check(status);
  std::vector<uint32_t> out(len);
  check(rc_parse_vertex_list(arg.c_str(), out.data(), out.size(), &len));
  return out;
}

void emit(const Json& line) { std::cout << line.dump() << '\n' << std::flush; }

struct Instance {
  std::string graph_path;
  std::string tree_spec = "bfs";
  uint32_t root = 0;
  uint64_t seed = 0;

  GraphHandle graph;
  TreeHandle tree;
  EngineHandle engine;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--graph", graph_path, "Graph file (`n m` header, then `u v [w]` lines)")
        ->required();
    cmd->add_option("--tree", tree_spec, "bfs | dfs | uniform | u,v;u,v;... | @file");
    cmd->add_option("--root", root, "Tree root");
    cmd->add_option("--seed", seed, "Seed for generated trees");
  }

  void load() {
    rc_graph* g = nullptr;
    check(rc_graph_load(graph_path.c_str(), &g));
    graph.reset(g);
    rc_tree* t = nullptr;
    check(rc_tree_from_spec(graph.get(), tree_spec.c_str(), root, seed, &t));
    tree.reset(t);
    rc_engine* e = nullptr;
    check(rc_engine_create(tree.get(), &e));
    engine.reset(e);
  }
};

Json case_json(const rc_gamma_case& c) {
  Json out{{"case", rc_case_name(c.tag)}};
  if (c.tag == RC_CASE2) {
    out["deepest"] = c.deepest;
    out["shallowest"] = c.shallowest;
  }
  if (c.tag == RC_CASE4) out["eliminated"] = c.eliminated;
  return out;
}

int run_delta(Instance& in) {
  in.load();
  const auto n = rc_tree_vertex_count(in.tree.get());
  const auto root = rc_tree_root(in.tree.get());
  for (uint32_t v = 0; v < n; ++v) {
    if (v == root) continue;
    uint64_t size = 0;
    check(rc_engine_subtree_cut_size(in.engine.get(), v, &size));
    emit(Json{{"vertex", v}, {"delta", size}});
  }
  return kExitOk;
}

int run_gamma(Instance& in, const std::string& pair, const std::string& set, bool trace) {
  in.load();
  const auto members = vertex_list(pair.empty() ? set : pair);
  if (!pair.empty() && members.size() != 2)
    throw InputError{"--pair expects exactly two vertices"};
  std::vector<rc_gamma_case> steps(std::max<size_t>(members.size(), 1));
  size_t step_count = 0;
  uint64_t value = 0;
  check(rc_engine_k_wise_gamma(in.engine.get(), members.data(), members.size(), &value,
                               steps.data(), &step_count));
  Json line{{"gamma", value}, {"case", rc_case_name(steps[0].tag)}};
  if (trace) {
    Json list = Json::array();
    for (size_t i = 0; i < step_count; ++i) list.push_back(case_json(steps[i]));
    line["trace"] = std::move(list);
  }
  emit(line);
  return kExitOk;
}

int run_cutsize(Instance& in, const std::string& respect, const std::string& side_arg) {
  in.load();
  if (!respect.empty()) {
    const auto s = vertex_list(respect);
    uint64_t size = 0;
    check(rc_engine_cut_size(in.engine.get(), s.data(), s.size(), &size));
    emit(Json{{"size", size}, {"k", s.size()}});
    return kExitOk;
  }
  const auto side = vertex_list(side_arg);
  uint64_t size = 0;
  size_t k = 0;
  const auto status = rc_engine_cut_size_of_side(in.engine.get(), side.data(), side.size(), &size, &k);
  if (status == RC_ERR_K_LIMIT) {
    check(rc_cut_size_direct(in.graph.get(), side.data(), side.size(), &size));
    emit(Json{{"size", size}, {"k", k}, {"method", "direct"}});
    return kExitOk;
  }
  check(status);
  emit(Json{{"size", size}, {"k", k}});
  return kExitOk;
}

int run_decompose(Instance& in, const std::string& side_arg) {
  in.load();
  const auto side = vertex_list(side_arg);
  std::vector<uint32_t> basis(rc_tree_vertex_count(in.tree.get()));
  size_t len = 0;
  int complemented = 0;
  check(rc_tree_decompose(in.tree.get(), side.data(), side.size(), basis.data(), basis.size(), &len,
                          &complemented));
  basis.resize(len);
  emit(Json{{"basis", basis}, {"complemented", complemented != 0}});
  return kExitOk;
}

int run_selfcheck(rc_selfcheck_options options) {
  rc_selfcheck_report report{};
  char* counterexample = nullptr;
  check(rc_selfcheck(&options, &report, &counterexample));
  if (counterexample != nullptr) {
    Json line{{"counterexample", Json::parse(counterexample)}};
    rc_string_free(counterexample);
    emit(line);
  }
  emit(Json{{"trials", report.trials},
            {"checks", report.checks},
            {"skipped", report.skipped},
            {"mismatches", report.mismatches}});
  return report.mismatches == 0 ? kExitOk : kExitMismatch;
}

int run_bench(const rc_bench_options& options) {
  rc_bench_report report{};
  check(rc_bench(&options, &report));
  static const char* const strategies[] = {"bfs", "dfs", "uniform"};
  emit(Json{{"n", options.n},
            {"m", options.m},
            {"k", options.k},
            {"queries", options.queries},
            {"seed", options.seed},
            {"tree", strategies[options.strategy]},
            {"generate_ms", report.generate_ms},
            {"tree_ms", report.tree_ms},
            {"subtree_cuts_ms", report.subtree_cuts_ms},
            {"pairwise_ms", report.pairwise_ms},
            {"k_wise_ms", report.k_wise_ms},
            {"cut_size_ms", report.cut_size_ms},
            {"checksum", report.checksum}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sizes of cuts that k-respect a rooted spanning tree"};
  app.require_subcommand(1);

  Instance instance;

  auto* delta = app.add_subcommand("delta", "Cut size of every subtree");
  instance.add_options(delta);

  auto* gamma = app.add_subcommand("gamma", "Intersection size of subtree cuts");
  instance.add_options(gamma);
  std::string pair, set;
  bool trace = false;
  auto* pair_opt = gamma->add_option("--pair", pair, "x,y");
  auto* set_opt = gamma->add_option("--set", set, "v1,v2,...");
  pair_opt->excludes(set_opt);
  gamma->add_flag("--trace", trace, "Include the classification steps");

  auto* cutsize = app.add_subcommand("cutsize", "Size of a tree-respecting cut");
  instance.add_options(cutsize);
  std::string respect, side;
  auto* respect_opt = cutsize->add_option("--respect", respect, "Vertices whose parent edges cross");
  auto* side_opt = cutsize->add_option("--vertex-set", side, "Cut side: v1,v2,... or @file");
  respect_opt->excludes(side_opt);

  auto* decompose = app.add_subcommand("decompose", "Subtree basis of a cut side");
  instance.add_options(decompose);
  std::string decompose_side;
  decompose->add_option("--vertex-set", decompose_side, "Cut side: v1,v2,... or @file")->required();

  rc_selfcheck_options check_opts;
  rc_selfcheck_options_init(&check_opts);
  auto* selfcheck = app.add_subcommand("selfcheck", "Compare against brute force on random graphs");
  selfcheck->add_option("--n", check_opts.max_n, "Largest vertex count");
  selfcheck->add_option("--trials", check_opts.trials, "Number of random instances");
  selfcheck->add_option("--seed", check_opts.seed, "Seed");
  selfcheck->add_option("--random-sets", check_opts.random_sets, "Cut sides per trial when n > 8");

  rc_bench_options bench_opts;
  rc_bench_options_init(&bench_opts);
  std::string bench_tree = "uniform";
  auto* bench = app.add_subcommand("bench", "Time precompute and queries on a random graph");
  bench->add_option("--n", bench_opts.n, "Vertices");
  bench->add_option("--m", bench_opts.m, "Edges");
  bench->add_option("--k", bench_opts.k, "Query set size");
  bench->add_option("--queries", bench_opts.queries, "Queries to average over");
  bench->add_option("--seed", bench_opts.seed, "Seed");
  bench->add_option("--tree", bench_tree, "bfs | dfs | uniform")
      ->check(CLI::IsMember({"bfs", "dfs", "uniform"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*delta) return run_delta(instance);
    if (*gamma) {
      if (pair.empty() && set.empty()) throw InputError{"gamma needs --pair or --set"};
      return run_gamma(instance, pair, set, trace);
    }
    if (*cutsize) {
      if (respect.empty() && side.empty()) throw InputError{"cutsize needs --respect or --vertex-set"};
      return run_cutsize(instance, respect, side);
    }
    if (*decompose) return run_decompose(instance, decompose_side);
    if (*selfcheck) {
      size_t max_k = 0;
      check(rc_max_k_from_environment(&max_k));
      check_opts.max_k = max_k;
      return run_selfcheck(check_opts);
    }
    if (*bench) {
      bench_opts.strategy = bench_tree == "bfs"   ? RC_TREE_BFS
                            : bench_tree == "dfs" ? RC_TREE_DFS
                                                  : RC_TREE_UNIFORM;
      return run_bench(bench_opts);
    }
  } catch (const InputError& e) {
    std::cerr << "respcut: " << e.message << '\n';
    return kExitInput;
  }
  return kExitInput;
}
