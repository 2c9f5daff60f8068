#include "respcut/harness.hpp"

#include <chrono>

#include <json.hpp>

#include "respcut/cut_algebra.hpp"

namespace respcut {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

nlohmann::json describe_instance(const Graph& g, const RootedSpanningTree& t) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.weight});
  return {{"n", g.vertex_count()},
          {"edges", std::move(edges)},
          {"root", t.root()},
          {"tree_edges", std::vector<EdgeId>(t.tree_edges().begin(), t.tree_edges().end())}};
}

}  // namespace

SelfcheckReport run_selfcheck(const SelfcheckOptions& options) {
  if (options.max_n < 3) throw Error(ErrorCode::kInvalidArgument, "selfcheck needs max_n >= 3");
  SelfcheckReport report;
  Rng rng(options.seed, RngStream::kHarness);

  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    ++report.trials;
    const std::size_t n = rng.between(3, options.max_n);
    const std::size_t m = n - 1 + rng.below(n + 1);
    const auto graph = gen_connected_graph(n, m, rng.next());
    const auto strategy = static_cast<TreeStrategy>(trial % 3);
    const auto root = static_cast<Vertex>(rng.below(n));
    const auto tree = gen_spanning_tree(graph, root, rng.next(), strategy);
    const GammaEngine engine(graph, tree, options.max_k);

    auto fail = [&](nlohmann::json detail) {
      ++report.mismatches;
      auto doc = describe_instance(graph, tree);
      doc["trial"] = trial;
      doc.update(detail);
      report.counterexample = doc.dump();
    };

    auto check_side = [&](const VertexSet& side) -> bool {
      ++report.checks;
      CutAnswer answer;
      try {
        answer = engine.cut_size_via_tree(side);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::kKLimitExceeded) throw;
        ++report.skipped;
        return true;
      }
      const auto expected = cut_size_direct(graph, side);
      if (answer.size != expected) {
        fail({{"kind", "cut_size"}, {"A", side.members()}, {"basis", answer.basis},
              {"expected", expected}, {"got", answer.size}});
        return false;
      }
      ++report.checks;
      const auto fast = engine.k_wise_gamma(answer.basis);
      const auto slow = oracle::oracle_k_wise_gamma(graph, tree, answer.basis);
      if (fast != slow) {
        fail({{"kind", "k_wise_gamma"}, {"S", answer.basis}, {"expected", slow}, {"got", fast}});
        return false;
      }
      return true;
    };

    if (n <= 8) {
      for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << n); ++mask) {
        VertexSet side(n);
        for (Vertex v = 0; v < n; ++v)
          if ((mask >> v) & 1u) side.insert(v);
        if (!check_side(side)) return report;
      }
    } else {
      for (std::size_t s = 0; s < options.random_sets; ++s) {
        VertexSet side(n);
        for (Vertex v = 0; v < n; ++v)
          if (rng.below(2) == 1) side.insert(v);
        const auto size = side.count();
        if (size == 0 || size == n) continue;
        if (!check_side(side)) return report;
      }
    }
  }
  return report;
}

BenchReport run_bench(const BenchOptions& options) {
  BenchReport report;
  report.n = options.n;
  report.m = options.m;
  report.k = options.k;
  report.queries = options.queries;
  if (options.k < 1 || options.k + 1 > options.n)
    throw Error(ErrorCode::kInvalidArgument, "bench needs 1 <= k <= n - 1");

  auto start = Clock::now();
  const auto graph = gen_connected_graph(options.n, options.m, options.seed);
  report.generate_ms = elapsed_ms(start);

  start = Clock::now();
  const auto tree = gen_spanning_tree(graph, 0, options.seed, options.strategy);
  report.tree_ms = elapsed_ms(start);

  start = Clock::now();
  const auto singles = all_subtree_cut_sizes(graph, tree);
  report.subtree_cuts_ms = elapsed_ms(start);
  report.checksum += singles.empty() ? 0 : singles.back();

  const GammaEngine engine(graph, tree, std::max(options.k, std::size_t{1}));
  if (options.queries == 0) return report;

  Rng rng(options.seed, RngStream::kQuery);
  double pair_total = 0, kwise_total = 0, cut_total = 0;
  for (std::size_t q = 0; q < options.queries; ++q) {
    const auto pair = gen_query_set(tree, std::min<std::size_t>(2, options.n - 1), rng.next());
    start = Clock::now();
    if (pair.size() == 2) report.checksum += pairwise_gamma(graph, tree, pair[0], pair[1]);
    pair_total += elapsed_ms(start);

    const auto s = gen_query_set(tree, options.k, rng.next());
    start = Clock::now();
    report.checksum += engine.k_wise_gamma(s);
    kwise_total += elapsed_ms(start);

    start = Clock::now();
    report.checksum += engine.k_respecting_cut_size(s);
    cut_total += elapsed_ms(start);
  }
  const auto q = static_cast<double>(options.queries);
  report.pairwise_ms = pair_total / q;
  report.k_wise_ms = kwise_total / q;
  report.cut_size_ms = cut_total / q;
  return report;
}

}  // namespace respcut
