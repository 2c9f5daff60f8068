#include "respcut/graph.hpp"

#include <string>

namespace respcut {

Graph::Graph(std::size_t n, std::span<const EdgeSpec> edges) : n_(n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "graph needs at least one vertex");
  if (n >= kNoVertex) throw Error(ErrorCode::kInvalidArgument, "too many vertices");
  edges_.reserve(edges.size());
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const auto where = " at edge index " + std::to_string(i);
    if (e.u >= n || e.v >= n)
      throw Error(ErrorCode::kEndpointOutOfRange, "endpoint out of range" + where, i);
    if (e.u == e.v) throw Error(ErrorCode::kSelfLoop, "self-loop" + where, i);
    if (e.weight == 0) throw Error(ErrorCode::kZeroWeight, "zero weight" + where, i);
    edges_.push_back(Edge{e.u, e.v, e.weight});
    total_weight_ += e.weight;
    ++degree[e.u];
    ++degree[e.v];
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto id = static_cast<EdgeId>(i);
    adjacency_[fill[edges_[i].u]++] = Incidence{edges_[i].v, id};
    adjacency_[fill[edges_[i].v]++] = Incidence{edges_[i].u, id};
  }
}

EdgeSet cut_edge_set(const Graph& g, const VertexSet& a) {
  if (a.universe() != g.vertex_count())
    throw Error(ErrorCode::kUniverseMismatch, "vertex set does not match graph");
  EdgeSet out(g.edge_count());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (a.contains(edges[i].u) != a.contains(edges[i].v)) out.insert(static_cast<EdgeId>(i));
  }
  return out;
}

Weight cut_size_direct(const Graph& g, const VertexSet& a) {
  if (a.universe() != g.vertex_count())
    throw Error(ErrorCode::kUniverseMismatch, "vertex set does not match graph");
  Weight total = 0;
  for (const auto& e : g.edges()) {
    if (a.contains(e.u) != a.contains(e.v)) total += e.weight;
  }
  return total;
}

Weight total_weight_of(const Graph& g, const EdgeSet& edges) {
  if (edges.universe() != g.edge_count())
    throw Error(ErrorCode::kUniverseMismatch, "edge set does not match graph");
  Weight total = 0;
  for (auto id : edges.members()) total += g.edge(id).weight;
  return total;
}

}  // namespace respcut
