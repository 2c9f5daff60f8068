#ifndef RESPCUT_GENERATORS_HPP
#define RESPCUT_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "respcut/graph.hpp"
#include "respcut/rooted_tree.hpp"

namespace respcut {

/// Independent pseudorandom streams derived from one seed.
enum class RngStream : std::uint64_t {
  kTreeEdges = 1,
  kExtraEdges = 2,
  kSpanningTree = 3,
  kQuery = 4,
  kHarness = 5,
};

/// Portable generator: std::mt19937_64 (whose output sequence is fixed by the
/// standard) seeded through splitmix64, with an unbiased bounded draw done by
/// rejection. Library distributions are avoided because their output differs
/// between standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  Rng(std::uint64_t seed, RngStream stream)
      : engine_(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(stream)))) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

enum class TreeStrategy { kBfs, kDfs, kUniform };

/// "bfs", "dfs" or "uniform"; anything else throws kInvalidArgument.
TreeStrategy parse_tree_strategy(std::string_view name);
std::string_view tree_strategy_name(TreeStrategy s) noexcept;

/// Connected multigraph with exactly target_m weight-1 edges: a uniformly
/// random labelled spanning tree (Wilson's algorithm on the complete graph)
/// followed by target_m - (n - 1) uniformly random non-loop edges.
Graph gen_connected_graph(std::size_t n, std::size_t target_m, std::uint64_t seed);

/// Spanning tree of a connected graph. bfs and dfs visit neighbors in a
/// seed-shuffled order; uniform runs Wilson's algorithm from the root.
/// Throws kDisconnected when g is not connected.
RootedSpanningTree gen_spanning_tree(const Graph& g, Vertex root, std::uint64_t seed,
                                     TreeStrategy strategy);

/// Edge ids of the tree gen_spanning_tree would build.
std::vector<EdgeId> gen_spanning_tree_edges(const Graph& g, Vertex root, std::uint64_t seed,
                                            TreeStrategy strategy);

/// k distinct non-root vertices, ascending. Throws kInvalidArgument unless
/// 1 <= k <= n - 1.
std::vector<Vertex> gen_query_set(const RootedSpanningTree& t, std::size_t k, std::uint64_t seed);

}  // namespace respcut

#endif  // RESPCUT_GENERATORS_HPP
