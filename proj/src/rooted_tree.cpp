#include "respcut/rooted_tree.hpp"

#include <algorithm>
#include <string>

namespace respcut {

RootedSpanningTree::RootedSpanningTree(const Graph& g, std::span<const EdgeId> tree_edges,
                                       Vertex root)
    : root_(root) {
  const std::size_t n = g.vertex_count();
  if (root >= n)
    throw Error(ErrorCode::kRootOutOfRange, "root " + std::to_string(root) + " out of range");
  if (tree_edges.size() != n - 1)
    throw Error(ErrorCode::kNotSpanning,
                "spanning tree needs " + std::to_string(n - 1) + " edges, got " +
                    std::to_string(tree_edges.size()));

  on_tree_.assign(g.edge_count(), 0);
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < tree_edges.size(); ++i) {
    const EdgeId id = tree_edges[i];
    if (id >= g.edge_count())
      throw Error(ErrorCode::kInvalidArgument, "tree edge id " + std::to_string(id) + " unknown",
                  i);
    if (on_tree_[id] != 0)
      throw Error(ErrorCode::kNotSpanning, "tree edge id " + std::to_string(id) + " repeated", i);
    on_tree_[id] = 1;
    ++degree[g.edge(id).u];
    ++degree[g.edge(id).v];
  }
  tree_edges_.assign(tree_edges.begin(), tree_edges.end());
  std::sort(tree_edges_.begin(), tree_edges_.end());

  // Tree adjacency in CSR form, neighbors sorted so children come out ascending.
  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) off[v + 1] = off[v] + degree[v];
  std::vector<Incidence> adj(off[n]);
  {
    std::vector<std::size_t> fill(off.begin(), off.end() - 1);
    for (auto id : tree_edges_) {
      const auto& e = g.edge(id);
      adj[fill[e.u]++] = Incidence{e.v, id};
      adj[fill[e.v]++] = Incidence{e.u, id};
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(adj.begin() + static_cast<std::ptrdiff_t>(off[v]),
                adj.begin() + static_cast<std::ptrdiff_t>(off[v + 1]),
                [](const Incidence& a, const Incidence& b) {
                  return a.neighbor != b.neighbor ? a.neighbor < b.neighbor : a.edge < b.edge;
                });
    }
  }

  parent_.assign(n, kNoVertex);
  parent_edge_.assign(n, kNoEdge);
  depth_.assign(n, 0);
  tin_.assign(n, 0);
  tout_.assign(n, 0);
  preorder_.reserve(n);

  std::vector<std::uint8_t> seen(n, 0);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({root, off[root]});
  seen[root] = 1;
  tin_[root] = 0;
  preorder_.push_back(root);
  while (!stack.empty()) {
    auto& top = stack.back();
    if (top.next == off[top.v + 1]) {
      tout_[top.v] = static_cast<std::uint32_t>(preorder_.size() - 1);
      stack.pop_back();
      continue;
    }
    const auto inc = adj[top.next++];
    if (inc.edge == parent_edge_[top.v]) continue;
    if (seen[inc.neighbor] != 0)
      throw Error(ErrorCode::kNotSpanning, "tree edges contain a cycle", inc.edge);
    const Vertex c = inc.neighbor;
    seen[c] = 1;
    parent_[c] = top.v;
    parent_edge_[c] = inc.edge;
    depth_[c] = depth_[top.v] + 1;
    tin_[c] = static_cast<std::uint32_t>(preorder_.size());
    preorder_.push_back(c);
    stack.push_back({c, off[c]});
  }
  if (preorder_.size() != n)
    throw Error(ErrorCode::kNotSpanning, "tree edges do not reach every vertex");

  child_offset_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (parent_[v] != kNoVertex) ++child_offset_[parent_[v] + 1];
  for (std::size_t v = 0; v < n; ++v) child_offset_[v + 1] += child_offset_[v];
  child_list_.resize(n - 1);
  std::vector<std::size_t> fill(child_offset_.begin(), child_offset_.end() - 1);
  for (Vertex v = 0; v < n; ++v)
    if (parent_[v] != kNoVertex) child_list_[fill[parent_[v]]++] = v;
}

Vertex RootedSpanningTree::parent(Vertex v) const {
  check(v);
  if (v == root_) throw Error(ErrorCode::kInvalidArgument, "the root has no parent");
  return parent_[v];
}

EdgeId RootedSpanningTree::parent_edge(Vertex v) const {
  check(v);
  if (v == root_) throw Error(ErrorCode::kInvalidArgument, "the root has no parent edge");
  return parent_edge_[v];
}

VertexSet RootedSpanningTree::subtree_members(Vertex v) const {
  check(v);
  VertexSet out(vertex_count());
  for (auto i = tin_[v]; i <= tout_[v]; ++i) out.insert(preorder_[i]);
  return out;
}

std::vector<Vertex> RootedSpanningTree::root_path(Vertex v) const {
  check(v);
  std::vector<Vertex> path(depth_[v] + 1);
  for (auto i = path.size(); i-- > 0; v = parent_[v]) path[i] = v;
  return path;
}

XorBasis decompose_cut_as_xor_basis(const Graph& g, const RootedSpanningTree& t,
                                    const VertexSet& a) {
  if (a.universe() != g.vertex_count())
    throw Error(ErrorCode::kUniverseMismatch, "vertex set does not match graph");
  const auto size = a.count();
  if (size == 0 || size == g.vertex_count())
    throw Error(ErrorCode::kInvalidArgument, "cut side must be a proper nonempty subset");
  XorBasis out;
  out.complemented = a.contains(t.root());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == t.root()) continue;
    const auto& e = g.edge(t.parent_edge(v));
    if (a.contains(e.u) != a.contains(e.v)) out.basis.push_back(v);
  }
  return out;
}

VertexSet materialize_xor(const RootedSpanningTree& t, std::span<const Vertex> subtree_roots) {
  const auto n = t.vertex_count();
  std::vector<std::uint8_t> toggles(n, 0);
  for (auto v : subtree_roots) {
    if (v >= n) throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
    toggles[v] ^= 1;
  }
  VertexSet out(n);
  std::vector<std::uint8_t> parity(n, 0);
  for (auto v : t.preorder()) {
    const std::uint8_t above = v == t.root() ? 0 : parity[t.parent(v)];
    parity[v] = above ^ toggles[v];
    if (parity[v] != 0) out.insert(v);
  }
  return out;
}

}  // namespace respcut
