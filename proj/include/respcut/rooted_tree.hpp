#ifndef RESPCUT_ROOTED_TREE_HPP
#define RESPCUT_ROOTED_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "respcut/graph.hpp"

namespace respcut {

/// A spanning tree of a Graph, rooted and laid out by one depth-first
/// traversal. Subtree membership is an interval test on the discovery
/// indices, so every ancestry predicate is O(1).
///
/// Children are visited in ascending vertex-id order, which makes the
/// discovery indices reproducible for a given (graph, edge set, root).
class RootedSpanningTree {
 public:
  /// Throws kRootOutOfRange, kInvalidArgument (unknown edge id) or
  /// kNotSpanning (wrong edge count, repeated edge, cycle, disconnected).
  RootedSpanningTree(const Graph& g, std::span<const EdgeId> tree_edges, Vertex root);

  std::size_t vertex_count() const noexcept { return parent_.size(); }
  Vertex root() const noexcept { return root_; }

  /// Parent of v; throws kInvalidArgument at the root.
  Vertex parent(Vertex v) const;
  /// The tree edge joining v to its parent; throws kInvalidArgument at the root.
  EdgeId parent_edge(Vertex v) const;

  std::uint32_t depth(Vertex v) const { return depth_.at(v); }
  std::uint32_t euler_in(Vertex v) const { return tin_.at(v); }
  std::uint32_t euler_out(Vertex v) const { return tout_.at(v); }
  std::span<const Vertex> children(Vertex v) const {
    return {child_list_.data() + child_offset_.at(v),
            child_list_.data() + child_offset_.at(v + 1)};
  }
  /// Vertices in discovery order; preorder()[euler_in(v)] == v.
  std::span<const Vertex> preorder() const noexcept { return preorder_; }

  /// True iff u lies in the subtree of v (v itself included).
  bool is_descendant(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return tin_[v] <= tin_[u] && tin_[u] <= tout_[v];
  }

  /// True iff the subtrees of u and v are disjoint.
  bool is_independent(Vertex u, Vertex v) const {
    return !is_descendant(u, v) && !is_descendant(v, u);
  }

  bool is_tree_edge(EdgeId e) const { return on_tree_.at(e) != 0; }
  std::span<const EdgeId> tree_edges() const noexcept { return tree_edges_; }

  VertexSet subtree_members(Vertex v) const;

  /// Path from the root down to v, both ends included.
  std::vector<Vertex> root_path(Vertex v) const;

 private:
  void check(Vertex v) const {
    if (v >= parent_.size())
      throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " out of range");
  }

  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> tin_;
  std::vector<std::uint32_t> tout_;
  std::vector<std::size_t> child_offset_;
  std::vector<Vertex> child_list_;
  std::vector<Vertex> preorder_;
  std::vector<EdgeId> tree_edges_;
  std::vector<std::uint8_t> on_tree_;
};

/// The subtree roots whose symmetric difference reproduces a cut side.
struct XorBasis {
  std::vector<Vertex> basis;  // ascending
  bool complemented = false;  // true: the xor equals V \ A rather than A
};

/// S = { v != root : parent_edge(v) crosses A }. Requires A to be a proper,
/// nonempty subset of V (kInvalidArgument otherwise).
XorBasis decompose_cut_as_xor_basis(const Graph& g, const RootedSpanningTree& t,
                                    const VertexSet& a);

/// Symmetric difference of the subtrees rooted at the given vertices: u is a
/// member iff an odd number of them lie on the root path of u.
VertexSet materialize_xor(const RootedSpanningTree& t, std::span<const Vertex> subtree_roots);

}  // namespace respcut

#endif  // RESPCUT_ROOTED_TREE_HPP
