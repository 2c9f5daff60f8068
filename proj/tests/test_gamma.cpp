#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "respcut/cut_algebra.hpp"
#include "respcut/gamma.hpp"
#include "respcut/generators.hpp"
#include "support/bridge.hpp"
#include "support/fixtures.hpp"

using namespace respcut;

namespace {

using Members = std::vector<Vertex>;

ErrorCode error_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

// Brute-force value of the fixture query, computed without the library.
Weight brute_gamma(const fixtures::Fixture& f, const Members& s) {
  return brute::gamma(bridge::edges_of(f.graph), bridge::parents_of(f.graph, f.tree), s);
}

}  // namespace

TEST_CASE("all_subtree_cut_sizes on fixtures") {
  const auto f1 = fixtures::f1();
  const auto f2 = fixtures::f2();
  CHECK(brute_gamma(f1, {1}) == 2);
  CHECK(brute_gamma(f1, {2}) == 2);
  CHECK(brute_gamma(f2, {3}) == 1);

  const auto d1 = all_subtree_cut_sizes(f1.graph, f1.tree);
  CHECK(d1[1] == 2);
  CHECK(d1[2] == 2);
  const auto d2 = all_subtree_cut_sizes(f2.graph, f2.tree);
  CHECK(d2[1] == 2);
  CHECK(d2[2] == 2);
  CHECK(d2[3] == 1);
}

TEST_CASE("all_subtree_cut_sizes on a tree-only graph is the parent edge weight") {
  const Graph g(5, std::vector<EdgeSpec>{{0, 1, 4}, {1, 2, 2}, {1, 3, 9}, {0, 4, 1}});
  const RootedSpanningTree t(g, fixtures::first_edges(4), 0);
  const auto d = all_subtree_cut_sizes(g, t);
  for (Vertex v = 1; v < 5; ++v) CHECK(d[v] == g.edge(t.parent_edge(v)).weight);
}

TEST_CASE("all_subtree_cut_sizes matches the direct cut of every subtree") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed * 7 % 90;
    const auto g = gen_connected_graph(n, n - 1 + seed * 13 % (3 * n), seed);
    const auto t = gen_spanning_tree(g, static_cast<Vertex>(seed % n), seed,
                                     static_cast<TreeStrategy>(seed % 3));
    const auto d = all_subtree_cut_sizes(g, t);
    for (Vertex v = 0; v < n; ++v)
      if (v != t.root()) REQUIRE(d[v] == cut_size_direct(g, t.subtree_members(v)));
  }
}

TEST_CASE("pairwise_gamma on fixtures") {
  const auto f1 = fixtures::f1();
  const auto f2 = fixtures::f2();
  CHECK(brute_gamma(f1, {1, 2}) == 1);
  CHECK(brute_gamma(f2, {1, 2}) == 1);
  CHECK(brute_gamma(f2, {1, 3}) == 0);

  CHECK(pairwise_gamma(f1.graph, f1.tree, 1, 2) == 1);
  CHECK(pairwise_gamma(f1.graph, f1.tree, 2, 1) == 1);
  CHECK(pairwise_gamma(f2.graph, f2.tree, 1, 2) == 1);
  CHECK(pairwise_gamma(f2.graph, f2.tree, 1, 3) == 0);

  CHECK(error_of([&] { pairwise_gamma(f1.graph, f1.tree, 0, 1); }) == ErrorCode::kRootInQuery);
  CHECK(error_of([&] { pairwise_gamma(f1.graph, f1.tree, 2, 2); }) == ErrorCode::kDuplicateVertex);
}

TEST_CASE("classify_gamma_case on fixtures") {
  const auto f2 = fixtures::f2();
  const auto f3 = fixtures::f3();
  const auto f4 = fixtures::f4();
  const auto f5 = fixtures::f5();
  const Members s123{1, 2, 3};

  CHECK(classify_gamma_case(f2.tree, s123).tag == GammaCaseTag::kAllIndependent);

  const auto chain = classify_gamma_case(f3.tree, s123);
  CHECK(chain.tag == GammaCaseTag::kChain);
  CHECK(chain.deepest == 3);
  CHECK(chain.shallowest == 1);

  CHECK(classify_gamma_case(f4.tree, s123).tag == GammaCaseTag::kBranchingUnderAncestor);

  const auto elim = classify_gamma_case(f5.tree, s123);
  CHECK(elim.tag == GammaCaseTag::kEliminable);
  CHECK(elim.eliminated == 1);

  CHECK(classify_gamma_case(f2.tree, Members{2}).tag == GammaCaseTag::kBaseSingle);
  CHECK(classify_gamma_case(f2.tree, Members{1, 2}).tag == GammaCaseTag::kBasePair);

  CHECK(error_of([&] { classify_gamma_case(f2.tree, Members{}); }) == ErrorCode::kEmptyQuery);
  CHECK(error_of([&] { classify_gamma_case(f2.tree, Members{0, 1, 2}); }) == ErrorCode::kRootInQuery);
  CHECK(error_of([&] { classify_gamma_case(f2.tree, Members{1, 2, 1}); }) == ErrorCode::kDuplicateVertex);
}

TEST_CASE("CASE4 picks the shallowest dependent member, smallest id on ties") {
  // 0 -> 1 -> 2, 0 -> 3 -> 4, 0 -> 5: pairs (1,2) and (3,4) are dependent,
  // 1 and 3 tie at depth 1.
  const Graph g(6, std::vector<EdgeSpec>{{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {3, 4, 1}, {0, 5, 1}});
  const RootedSpanningTree t(g, fixtures::first_edges(5), 0);
  const auto c = classify_gamma_case(t, Members{2, 4, 3, 1, 5});
  CHECK(c.tag == GammaCaseTag::kEliminable);
  CHECK(c.eliminated == 1);
  // 5 is shallow but independent of everything, so it is never chosen
  const auto d = classify_gamma_case(t, Members{5, 3, 4});
  CHECK(d.tag == GammaCaseTag::kEliminable);
  CHECK(d.eliminated == 3);
}

TEST_CASE("k_wise_gamma on fixtures") {
  const auto f2 = fixtures::f2();
  const auto f3 = fixtures::f3();
  const auto f4 = fixtures::f4();
  const auto f5 = fixtures::f5();
  const Members s123{1, 2, 3};

  CHECK(brute_gamma(f3, s123) == 1);
  CHECK(brute_gamma(f4, s123) == 0);
  CHECK(brute_gamma(f5, s123) == 1);

  CHECK(GammaEngine(f2.graph, f2.tree).k_wise_gamma(s123) == 0);

  const GammaEngine e3(f3.graph, f3.tree);
  CHECK(e3.k_wise_gamma(s123) == 1);
  CHECK(e3.k_wise_gamma(s123) == pairwise_gamma(f3.graph, f3.tree, 3, 1));

  std::vector<GammaCase> trace;
  CHECK(GammaEngine(f5.graph, f5.tree).k_wise_gamma(s123, &trace) == 1);
  REQUIRE(trace.size() == 2);
  CHECK(trace[0].tag == GammaCaseTag::kEliminable);
  CHECK(trace[0].eliminated == 1);
  CHECK(trace[1].tag == GammaCaseTag::kBasePair);

  CHECK(GammaEngine(f4.graph, f4.tree).k_wise_gamma(s123) == 0);
}

TEST_CASE("k_respecting_cut_size on fixtures") {
  const auto f1 = fixtures::f1();
  const auto f2 = fixtures::f2();
  // (2 + 2) - 2 * 1
  CHECK(brute::cut_size(bridge::edges_of(f1.graph), {1}) == 2);
  CHECK(GammaEngine(f1.graph, f1.tree).k_respecting_cut_size(Members{1, 2}) == 2);
  // 5 - 2 * (1 + 0 + 0) + 4 * 0
  CHECK(GammaEngine(f2.graph, f2.tree).k_respecting_cut_size(Members{1, 2, 3}) == 3);

  const GammaEngine e(f2.graph, f2.tree);
  for (Vertex v = 1; v < 4; ++v)
    CHECK(e.k_respecting_cut_size(Members{v}) == e.table().single(v));
}

TEST_CASE("cut_size_via_tree on fixtures") {
  const auto f1 = fixtures::f1();
  const auto f2 = fixtures::f2();
  auto a = GammaEngine(f1.graph, f1.tree).cut_size_via_tree(VertexSet(3, {1}));
  CHECK(a.size == 2);
  CHECK(a.basis == Members{1, 2});

  a = GammaEngine(f2.graph, f2.tree).cut_size_via_tree(VertexSet(4, {1, 2, 3}));
  CHECK(a.size == 3);
  CHECK(a.basis == Members{1, 2, 3});
  CHECK(a.case_counts[static_cast<int>(GammaCaseTag::kAllIndependent)] == 1);

  const GammaEngine e(f2.graph, f2.tree);
  for (Vertex v = 1; v < 4; ++v) {
    const auto s = e.cut_size_via_tree(f2.tree.subtree_members(v));
    CHECK(s.basis == Members{v});
    CHECK(s.size == e.table().single(v));
  }
}

TEST_CASE("k limit is enforced and reports k") {
  std::vector<EdgeSpec> edges;
  for (Vertex v = 1; v < 12; ++v) edges.push_back({0, v, 1});
  const Graph star(12, edges);
  const RootedSpanningTree t(star, fixtures::first_edges(11), 0);
  GammaEngine e(star, t, 4);
  Members s{1, 2, 3, 4, 5};
  CHECK(error_of([&] { e.k_respecting_cut_size(s); }) == ErrorCode::kKLimitExceeded);
  try {
    e.cut_size_via_tree(VertexSet(12, {1, 2, 3, 4, 5}));
    FAIL("expected k limit");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kKLimitExceeded);
    CHECK(err.detail() == std::optional<std::size_t>(5));
  }
  e.set_max_k(5);
  CHECK(e.k_respecting_cut_size(s) == 5);
  CHECK(error_of([&] { e.set_max_k(0); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([&] { e.set_max_k(kHardMaxK + 1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("k limit from the environment") {
  ::unsetenv("RESPECTING_CUTS_MAX_K");
  CHECK(max_k_from_environment() == kDefaultMaxK);
  ::setenv("RESPECTING_CUTS_MAX_K", "5", 1);
  CHECK(max_k_from_environment() == 5);
  const auto f = fixtures::f2();
  CHECK(GammaEngine(f.graph, f.tree).max_k() == 5);
  for (const char* bad : {"0", "abc", "7x", "99"}) {
    ::setenv("RESPECTING_CUTS_MAX_K", bad, 1);
    CHECK(error_of([] { max_k_from_environment(); }) == ErrorCode::kInvalidArgument);
  }
  ::unsetenv("RESPECTING_CUTS_MAX_K");
}

TEST_CASE("exhaustive equivalence with the oracle on small graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const auto g = gen_connected_graph(n, n - 1 + seed % 7, seed);
    const auto t = gen_spanning_tree(g, static_cast<Vertex>(seed % n), seed,
                                     static_cast<TreeStrategy>(seed % 3));
    const GammaEngine e(g, t);
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      VertexSet a(n);
      for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1u) a.insert(v);
      const auto answer = e.cut_size_via_tree(a);
      REQUIRE(answer.size == cut_size_direct(g, a));
      REQUIRE(e.k_wise_gamma(answer.basis) == oracle::oracle_k_wise_gamma(g, t, answer.basis));
    }
  }
}

TEST_CASE("gamma dichotomy, case soundness and oracle substitution on random instances") {
  Rng rng(77);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = rng.between(4, 60);
    const auto g = gen_connected_graph(n, n - 1 + rng.below(3 * n), rng.next());
    const auto t = gen_spanning_tree(g, 0, rng.next(), static_cast<TreeStrategy>(round % 3));
    const std::size_t k = rng.between(1, std::min<std::size_t>(8, n - 1));
    const auto s = gen_query_set(t, k, rng.next());
    const GammaEngine e(g, t);

    const auto value = e.k_wise_gamma(s);
    const auto truth = oracle::oracle_k_wise_gamma(g, t, s);
    REQUIRE(value == truth);

    if (k >= 2) {
      bool found = value == 0;
      for (std::size_t i = 0; i < k && !found; ++i)
        for (std::size_t j = i + 1; j < k && !found; ++j) found = value == pairwise_gamma(g, t, s[i], s[j]);
      REQUIRE(found);
    }

    const auto c = classify_gamma_case(t, s);
    switch (c.tag) {
      case GammaCaseTag::kAllIndependent:
      case GammaCaseTag::kBranchingUnderAncestor: REQUIRE(truth == 0); break;
      case GammaCaseTag::kChain: REQUIRE(truth == pairwise_gamma(g, t, c.deepest, c.shallowest)); break;
      case GammaCaseTag::kEliminable: {
        Members rest;
        for (auto v : s)
          if (v != c.eliminated) rest.push_back(v);
        REQUIRE(truth == oracle::oracle_k_wise_gamma(g, t, rest));
        break;
      }
      default: break;
    }

    const auto fast = e.k_respecting_cut_size(s);
    const auto substituted = e.k_respecting_cut_size_with(
        s, [&](std::span<const Vertex> sub) { return oracle::oracle_k_wise_gamma(g, t, sub); });
    REQUIRE(fast == substituted);
    REQUIRE(fast == cut_size_direct(g, materialize_xor(t, s)));
  }
}

TEST_CASE("results do not depend on the order of the query set") {
  Rng rng(5);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = rng.between(10, 50);
    const auto g = gen_connected_graph(n, 2 * n, rng.next());
    const auto t = gen_spanning_tree(g, 0, rng.next(), TreeStrategy::kDfs);
    auto s = gen_query_set(t, rng.between(2, 7), rng.next());
    const GammaEngine e(g, t);
    const auto gamma = e.k_wise_gamma(s);
    const auto size = e.k_respecting_cut_size(s);
    const auto c = classify_gamma_case(t, s);
    for (std::size_t i = s.size(); i > 1; --i) std::swap(s[i - 1], s[rng.below(i)]);
    CHECK(e.k_wise_gamma(s) == gamma);
    CHECK(e.k_respecting_cut_size(s) == size);
    CHECK(classify_gamma_case(t, s) == c);
  }
}

TEST_CASE("pair tables agree with single-pair classification") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 20 + seed * 5;
    const auto g = gen_connected_graph(n, 3 * n, seed);
    const auto t = gen_spanning_tree(g, 0, seed, static_cast<TreeStrategy>(seed % 3));
    GammaTable lazy(g, t);
    GammaTable dense(g, t);
    dense.precompute_all_pairs(seed % 2 == 0 ? 1 : 3);
    CHECK(dense.has_all_pairs());
    const auto s = gen_query_set(t, 6, seed);
    const auto m = lazy.pair_matrix(s);
    lazy.prefetch_pairs(s);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (i == j) {
          CHECK(m[i * 6 + i] == lazy.single(s[i]));
          continue;
        }
        CHECK(m[i * 6 + j] == pairwise_gamma(g, t, s[i], s[j]));
        CHECK(lazy.pair(s[i], s[j]) == m[i * 6 + j]);
      }
    for (Vertex x = 1; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y)
        if (x != t.root() && y != t.root()) REQUIRE(dense.pair(x, y) == pairwise_gamma(g, t, x, y));
  }
}

TEST_CASE("weighted graphs keep every identity") {
  Rng rng(99);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = rng.between(3, 40);
    const auto base = gen_connected_graph(n, n - 1 + rng.below(2 * n), rng.next());
    std::vector<EdgeSpec> edges;
    for (const auto& e : base.edges()) edges.push_back({e.u, e.v, rng.between(1, 10)});
    const Graph g(n, edges);
    const auto t = gen_spanning_tree(g, 0, rng.next(), TreeStrategy::kUniform);
    const GammaEngine e(g, t);
    const auto s = gen_query_set(t, rng.between(1, std::min<std::size_t>(6, n - 1)), rng.next());
    REQUIRE(e.k_wise_gamma(s) == oracle::oracle_k_wise_gamma(g, t, s));
    REQUIRE(e.k_respecting_cut_size(s) == cut_size_direct(g, materialize_xor(t, s)));
  }
}
