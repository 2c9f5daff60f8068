#include "respcut/generators.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace respcut {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  const std::uint64_t limit = static_cast<std::uint64_t>(-1) - static_cast<std::uint64_t>(-1) % bound;
  while (true) {
    const auto x = engine_();
    if (x < limit) return x % bound;
  }
}

TreeStrategy parse_tree_strategy(std::string_view name) {
  if (name == "bfs") return TreeStrategy::kBfs;
  if (name == "dfs") return TreeStrategy::kDfs;
  if (name == "uniform") return TreeStrategy::kUniform;
  throw Error(ErrorCode::kInvalidArgument, "unknown tree strategy '" + std::string(name) + "'");
}

std::string_view tree_strategy_name(TreeStrategy s) noexcept {
  switch (s) {
    case TreeStrategy::kBfs: return "bfs";
    case TreeStrategy::kDfs: return "dfs";
    case TreeStrategy::kUniform: return "uniform";
  }
  return "unknown";
}

Graph gen_connected_graph(std::size_t n, std::size_t target_m, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "graph needs at least one vertex");
  if (target_m < n - 1)
    throw Error(ErrorCode::kInvalidArgument,
                "target_m = " + std::to_string(target_m) + " below n - 1 = " + std::to_string(n - 1));
  if (n == 1 && target_m > 0)
    throw Error(ErrorCode::kInvalidArgument, "a single vertex admits no non-loop edges");

  std::vector<EdgeSpec> edges;
  edges.reserve(target_m);

  // Wilson's algorithm on K_n: loop-erased walks from each vertex until they
  // hit the growing tree; `next` keeps only the last exit from each vertex.
  Rng tree_rng(seed, RngStream::kTreeEdges);
  std::vector<std::uint8_t> in_tree(n, 0);
  std::vector<Vertex> next(n, kNoVertex);
  in_tree[tree_rng.below(n)] = 1;
  for (Vertex start = 0; start < n; ++start) {
    for (Vertex u = start; in_tree[u] == 0;) {
      auto w = static_cast<Vertex>(tree_rng.below(n - 1));
      if (w >= u) ++w;
      next[u] = w;
      u = w;
    }
    for (Vertex u = start; in_tree[u] == 0; u = next[u]) {
      in_tree[u] = 1;
      edges.push_back(EdgeSpec{u, next[u], 1});
    }
  }

  Rng extra_rng(seed, RngStream::kExtraEdges);
  while (edges.size() < target_m) {
    const auto u = static_cast<Vertex>(extra_rng.below(n));
    auto v = static_cast<Vertex>(extra_rng.below(n - 1));
    if (v >= u) ++v;
    edges.push_back(EdgeSpec{u, v, 1});
  }
  return Graph(n, edges);
}

std::vector<EdgeId> gen_spanning_tree_edges(const Graph& g, Vertex root, std::uint64_t seed,
                                            TreeStrategy strategy) {
  const auto n = g.vertex_count();
  if (root >= n) throw Error(ErrorCode::kRootOutOfRange, "root " + std::to_string(root) + " out of range");

  {
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(u))
        if (seen[inc.neighbor] == 0) {
          seen[inc.neighbor] = 1;
          ++reached;
          stack.push_back(inc.neighbor);
        }
    }
    if (reached != n) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }

  Rng rng(seed, RngStream::kSpanningTree);
  std::vector<EdgeId> out;
  out.reserve(n - 1);

  if (strategy == TreeStrategy::kUniform) {
    std::vector<std::uint8_t> in_tree(n, 0);
    std::vector<EdgeId> exit_edge(n, kNoEdge);
    in_tree[root] = 1;
    for (Vertex start = 0; start < n; ++start) {
      for (Vertex u = start; in_tree[u] == 0;) {
        const auto inc = g.incident(u);
        const auto& step = inc[rng.below(inc.size())];
        exit_edge[u] = step.edge;
        u = step.neighbor;
      }
      for (Vertex u = start; in_tree[u] == 0;) {
        in_tree[u] = 1;
        out.push_back(exit_edge[u]);
        const auto& e = g.edge(exit_edge[u]);
        u = e.u == u ? e.v : e.u;
      }
    }
    return out;
  }

  auto shuffled = [&](Vertex u) {
    const auto inc = g.incident(u);
    std::vector<Incidence> order(inc.begin(), inc.end());
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    return order;
  };

  std::vector<std::uint8_t> seen(n, 0);
  seen[root] = 1;
  if (strategy == TreeStrategy::kBfs) {
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (const auto& inc : shuffled(u))
        if (seen[inc.neighbor] == 0) {
          seen[inc.neighbor] = 1;
          out.push_back(inc.edge);
          queue.push_back(inc.neighbor);
        }
    }
    return out;
  }

  struct Frame {
    std::vector<Incidence> order;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({shuffled(root), 0});
  while (!stack.empty()) {
    auto& top = stack.back();
    if (top.next == top.order.size()) {
      stack.pop_back();
      continue;
    }
    const auto inc = top.order[top.next++];
    if (seen[inc.neighbor] != 0) continue;
    seen[inc.neighbor] = 1;
    out.push_back(inc.edge);
    stack.push_back({shuffled(inc.neighbor), 0});
  }
  return out;
}

RootedSpanningTree gen_spanning_tree(const Graph& g, Vertex root, std::uint64_t seed,
                                     TreeStrategy strategy) {
  const auto edges = gen_spanning_tree_edges(g, root, seed, strategy);
  return RootedSpanningTree(g, edges, root);
}

std::vector<Vertex> gen_query_set(const RootedSpanningTree& t, std::size_t k, std::uint64_t seed) {
  const auto n = t.vertex_count();
  if (k < 1 || k + 1 > n)
    throw Error(ErrorCode::kInvalidArgument,
                "query size " + std::to_string(k) + " outside [1, " + std::to_string(n - 1) + "]");
  std::vector<Vertex> pool;
  pool.reserve(n - 1);
  for (Vertex v = 0; v < n; ++v)
    if (v != t.root()) pool.push_back(v);
  Rng rng(seed, RngStream::kQuery);
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace respcut
