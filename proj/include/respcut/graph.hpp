#ifndef RESPCUT_GRAPH_HPP
#define RESPCUT_GRAPH_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "respcut/id_set.hpp"

namespace respcut {

/// Input record for graph construction. Edge ids are assigned in input order.
struct EdgeSpec {
  Vertex u = 0;
  Vertex v = 0;
  Weight weight = 1;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight weight = 1;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Undirected multigraph with positive integer weights. Immutable once built.
class Graph {
 public:
  /// Throws Error with kInvalidArgument (n == 0), kEndpointOutOfRange,
  /// kSelfLoop or kZeroWeight; the detail carries the offending edge index.
  Graph(std::size_t n, std::span<const EdgeSpec> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Incident edges of v, ordered by edge id.
  std::span<const Incidence> incident(Vertex v) const {
    return {adjacency_.data() + offsets_.at(v), adjacency_.data() + offsets_.at(v + 1)};
  }

  Weight total_weight() const noexcept { return total_weight_; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> adjacency_;
  Weight total_weight_ = 0;
};

/// Edges with exactly one endpoint in A.
EdgeSet cut_edge_set(const Graph& g, const VertexSet& a);

/// Weight of the cut computed straight from the definition.
Weight cut_size_direct(const Graph& g, const VertexSet& a);

Weight total_weight_of(const Graph& g, const EdgeSet& edges);

}  // namespace respcut

#endif  // RESPCUT_GRAPH_HPP
