#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "respcut/generators.hpp"
#include "respcut/rooted_tree.hpp"
#include "support/bridge.hpp"
#include "support/fixtures.hpp"

using namespace respcut;

namespace {

ErrorCode tree_error(const Graph& g, std::vector<EdgeId> edges, Vertex root) {
  try {
    RootedSpanningTree t(g, edges, root);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected tree construction to fail");
  return ErrorCode::kInvalidArgument;
}

VertexSet from_mask(std::size_t n, std::uint32_t mask) {
  VertexSet a(n);
  for (Vertex v = 0; v < n; ++v)
    if ((mask >> v) & 1u) a.insert(v);
  return a;
}

}  // namespace

TEST_CASE("tables of F1 (chain 0 -> 1 -> 2)") {
  const auto f = fixtures::f1();
  const auto& t = f.tree;
  CHECK(t.root() == 0);
  CHECK(t.depth(0) == 0);
  CHECK(t.depth(1) == 1);
  CHECK(t.depth(2) == 2);
  CHECK(t.parent(2) == 1);
  CHECK(t.parent_edge(1) == 0);
  CHECK(t.parent_edge(2) == 1);
  CHECK(t.root_path(2) == std::vector<Vertex>{0, 1, 2});
  CHECK(t.root_path(0) == std::vector<Vertex>{0});
  CHECK(t.subtree_members(1) == VertexSet(3, {1, 2}));
  CHECK(t.subtree_members(0) == VertexSet::full(3));
  CHECK(t.subtree_members(2) == VertexSet(3, {2}));
  CHECK(t.is_descendant(2, 1));
  CHECK_FALSE(t.is_descendant(1, 2));
  CHECK_FALSE(t.is_independent(1, 2));
  CHECK(t.is_tree_edge(0));
  CHECK_FALSE(t.is_tree_edge(2));
  CHECK_THROWS_AS(t.parent_edge(0), Error);
  CHECK_THROWS_AS(t.parent(0), Error);
}

TEST_CASE("independence on the F2 star") {
  const auto f = fixtures::f2();
  CHECK(f.tree.is_independent(1, 2));
  CHECK(f.tree.is_independent(2, 3));
  CHECK_FALSE(f.tree.is_independent(2, 2));
  CHECK_FALSE(f.tree.is_descendant(0, 1));
  CHECK(f.tree.children(0).size() == 3);
}

TEST_CASE("path rooted at an end has increasing discovery indices") {
  std::vector<EdgeSpec> edges;
  for (Vertex v = 0; v + 1 < 6; ++v) edges.push_back({v, v + 1, 1});
  const Graph g(6, edges);
  const RootedSpanningTree t(g, fixtures::first_edges(5), 0);
  for (Vertex v = 1; v < 6; ++v) {
    CHECK(t.parent(v) == v - 1);
    CHECK(t.euler_in(v) > t.euler_in(v - 1));
  }
}

TEST_CASE("invalid tree edge sets are rejected") {
  const auto f = fixtures::f1();
  CHECK(tree_error(f.graph, {0, 1, 2}, 0) == ErrorCode::kNotSpanning);
  CHECK(tree_error(f.graph, {0}, 0) == ErrorCode::kNotSpanning);
  CHECK(tree_error(f.graph, {0, 0}, 0) == ErrorCode::kNotSpanning);
  CHECK(tree_error(f.graph, {0, 7}, 0) == ErrorCode::kInvalidArgument);
  CHECK(tree_error(f.graph, {0, 1}, 3) == ErrorCode::kRootOutOfRange);

  // cycle on {0,1,2} leaves 3 unreachable
  const Graph g(4, std::vector<EdgeSpec>{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}});
  CHECK(tree_error(g, {0, 1, 2}, 0) == ErrorCode::kNotSpanning);
  // parallel edges form a 2-cycle
  const Graph p(3, std::vector<EdgeSpec>{{0, 1, 1}, {0, 1, 1}, {1, 2, 1}});
  CHECK(tree_error(p, {0, 1}, 0) == ErrorCode::kNotSpanning);
}

TEST_CASE("decompose_cut_as_xor_basis examples") {
  const auto f = fixtures::f1();
  auto d = decompose_cut_as_xor_basis(f.graph, f.tree, VertexSet(3, {1}));
  CHECK(d.basis == std::vector<Vertex>{1, 2});
  CHECK_FALSE(d.complemented);

  d = decompose_cut_as_xor_basis(f.graph, f.tree, VertexSet(3, {0}));
  CHECK(d.basis == std::vector<Vertex>{1});
  CHECK(d.complemented);

  for (Vertex v = 1; v < 3; ++v) {
    d = decompose_cut_as_xor_basis(f.graph, f.tree, f.tree.subtree_members(v));
    CHECK(d.basis == std::vector<Vertex>{v});
    CHECK_FALSE(d.complemented);
  }

  CHECK_THROWS_AS(decompose_cut_as_xor_basis(f.graph, f.tree, VertexSet(3)), Error);
  CHECK_THROWS_AS(decompose_cut_as_xor_basis(f.graph, f.tree, VertexSet::full(3)), Error);
}

TEST_CASE("subtree tree-edge structure and decomposition round trip, exhaustive n <= 8") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const auto g = gen_connected_graph(n, n - 1 + seed % 6, seed);
    const auto strategy = static_cast<TreeStrategy>(seed % 3);
    const auto t = gen_spanning_tree(g, static_cast<Vertex>(seed % n), seed, strategy);
    const auto parent = bridge::parents_of(g, t);

    for (Vertex v = 0; v < n; ++v) {
      REQUIRE(bridge::to_std(t.subtree_members(v)) == brute::subtree(parent, v));
      if (v == t.root()) continue;
      // only the parent edge of v leaves its subtree among tree edges
      const auto cut = cut_edge_set(g, t.subtree_members(v));
      std::vector<EdgeId> crossing;
      for (auto e : cut.members())
        if (t.is_tree_edge(e)) crossing.push_back(e);
      REQUIRE(crossing == std::vector<EdgeId>{t.parent_edge(v)});
    }

    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      const auto a = from_mask(n, mask);
      const auto d = decompose_cut_as_xor_basis(g, t, a);
      const auto rebuilt = materialize_xor(t, d.basis);
      REQUIRE(rebuilt == (d.complemented ? a.complement() : a));
      REQUIRE(bridge::to_std(rebuilt) == brute::xor_of_subtrees(parent, d.basis));
    }
  }
}

TEST_CASE("tree edges crossing a xor of subtrees are exactly their parent edges") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 4 + seed % 20;
    const auto g = gen_connected_graph(n, 2 * n, seed);
    const auto t = gen_spanning_tree(g, 0, seed, TreeStrategy::kUniform);
    for (std::size_t k = 1; k < n; k += 3) {
      const auto s = gen_query_set(t, k, seed * 31 + k);
      const auto cut = cut_edge_set(g, materialize_xor(t, s));
      std::vector<EdgeId> crossing, expected;
      for (auto e : cut.members())
        if (t.is_tree_edge(e)) crossing.push_back(e);
      for (auto v : s) expected.push_back(t.parent_edge(v));
      std::sort(expected.begin(), expected.end());
      REQUIRE(crossing == expected);
    }
  }
}

TEST_CASE("ancestry predicates behave as a forest order") {
  const auto g = gen_connected_graph(30, 60, 5);
  const auto t = gen_spanning_tree(g, 3, 5, TreeStrategy::kDfs);
  for (Vertex u = 0; u < 30; ++u) {
    CHECK(t.is_descendant(u, u));
    CHECK_FALSE(t.is_independent(u, u));
    CHECK(t.is_descendant(u, t.root()));
    if (u != t.root()) CHECK_FALSE(t.is_descendant(t.root(), u));
    const auto path = t.root_path(u);
    CHECK(path.size() == t.depth(u) + 1);
    for (auto a : path) CHECK(t.is_descendant(u, a));
    for (Vertex v = 0; v < 30; ++v) {
      CHECK(t.is_independent(u, v) == t.is_independent(v, u));
      if (u != v && t.is_descendant(u, v)) CHECK_FALSE(t.is_descendant(v, u));
    }
  }
}
