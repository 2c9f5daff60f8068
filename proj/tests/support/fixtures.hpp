#ifndef RESPCUT_TESTS_FIXTURES_HPP
#define RESPCUT_TESTS_FIXTURES_HPP

// Small hand-checkable instances. Tree edges are always the first n-1 edges.
//
//   F1  triangle 0-1-2, tree 0->1->2, extra edge (0,2)
//   F2  star 0->{1,2,3}, extra edge (1,2)
//   F3  path 0->1->2->3, chord (0,3)
//   F4  0->1, 1->2, 1->3, extra edge (2,3)
//   F5  0->1->2, 0->3, extra edge (2,3)

#include <numeric>
#include <vector>

#include "respcut/graph.hpp"
#include "respcut/rooted_tree.hpp"

namespace fixtures {

using respcut::EdgeId;
using respcut::EdgeSpec;
using respcut::Graph;
using respcut::RootedSpanningTree;

struct Fixture {
  Graph graph;
  RootedSpanningTree tree;
};

inline std::vector<EdgeId> first_edges(std::size_t count) {
  std::vector<EdgeId> ids(count);
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  return ids;
}

inline Fixture make(std::size_t n, const std::vector<EdgeSpec>& edges) {
  Graph g(n, edges);
  RootedSpanningTree t(g, first_edges(n - 1), 0);
  return Fixture{std::move(g), std::move(t)};
}

inline Fixture f1() { return make(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }
inline Fixture f2() { return make(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}}); }
inline Fixture f3() { return make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}}); }
inline Fixture f4() { return make(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}}); }
inline Fixture f5() { return make(4, {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {2, 3, 1}}); }

}  // namespace fixtures

#endif  // RESPCUT_TESTS_FIXTURES_HPP
