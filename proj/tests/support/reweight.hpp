#ifndef RESPCUT_TESTS_REWEIGHT_HPP
#define RESPCUT_TESTS_REWEIGHT_HPP

#include <vector>

#include "respcut/generators.hpp"
#include "respcut/graph.hpp"

namespace support {

/// Same edges, each given an independent weight in [lo, hi].
inline respcut::Graph reweight(const respcut::Graph& g, std::uint64_t seed, respcut::Weight lo,
                               respcut::Weight hi) {
  respcut::Rng rng(seed);
  std::vector<respcut::EdgeSpec> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, rng.between(lo, hi)});
  return respcut::Graph(g.vertex_count(), edges);
}

}  // namespace support

#endif  // RESPCUT_TESTS_REWEIGHT_HPP
