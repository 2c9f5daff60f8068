#include "respcut/cut_algebra.hpp"

#include <bit>
#include <deque>
#include <string>

namespace respcut::oracle {

namespace {

template <class Tag>
Weight measure(const IdSet<Tag>& s, std::span<const Weight> weights) {
  if (weights.empty()) return s.count();
  Weight total = 0;
  for (auto id : s.members()) total += weights[id];
  return total;
}

}  // namespace

template <class Tag>
Weight xor_size_by_inclusion_exclusion(std::span<const IdSet<Tag>> sets,
                                       std::span<const Weight> weights, std::size_t limit) {
  const std::size_t k = sets.size();
  if (k == 0) throw Error(ErrorCode::kEmptyQuery, "inclusion-exclusion over no sets");
  if (k > limit || k >= 63)
    throw Error(ErrorCode::kKLimitExceeded,
                "k = " + std::to_string(k) + " exceeds limit " + std::to_string(limit), k);
  const auto universe = sets.front().universe();
  for (const auto& s : sets)
    if (s.universe() != universe)
      throw Error(ErrorCode::kUniverseMismatch, "set universes differ");
  if (!weights.empty() && weights.size() != universe)
    throw Error(ErrorCode::kInvalidArgument, "weight table does not match universe");

  __int128 total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    IdSet<Tag> meet = IdSet<Tag>::full(universe);
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) meet &= sets[i];
    const int l = std::popcount(mask);
    const __int128 term = static_cast<__int128>(measure(meet, weights)) << (l - 1);
    total += (l % 2 == 1) ? term : -term;
  }
  if (total < 0) throw Error(ErrorCode::kInvalidArgument, "negative inclusion-exclusion total");
  return static_cast<Weight>(total);
}

template Weight xor_size_by_inclusion_exclusion<VertexTag>(std::span<const IdSet<VertexTag>>,
                                                           std::span<const Weight>, std::size_t);
template Weight xor_size_by_inclusion_exclusion<EdgeTag>(std::span<const IdSet<EdgeTag>>,
                                                         std::span<const Weight>, std::size_t);

VertexSet subtree_by_walk(const RootedSpanningTree& t, Vertex v) {
  VertexSet out(t.vertex_count());
  std::deque<Vertex> queue{v};
  out.insert(v);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (auto c : t.children(u)) {
      out.insert(c);
      queue.push_back(c);
    }
  }
  return out;
}

Weight oracle_k_wise_gamma(const Graph& g, const RootedSpanningTree& t,
                           std::span<const Vertex> subtrees) {
  if (subtrees.empty()) throw Error(ErrorCode::kEmptyQuery, "empty query set");
  EdgeSet meet = EdgeSet::full(g.edge_count());
  for (auto x : subtrees) {
    if (x == t.root()) throw Error(ErrorCode::kRootInQuery, "root in query set");
    meet &= cut_edge_set(g, subtree_by_walk(t, x));
  }
  return total_weight_of(g, meet);
}

bool check_cut_space_identity(const Graph& g, const RootedSpanningTree& t,
                              std::span<const Vertex> subtrees) {
  VertexSet side(g.vertex_count());
  EdgeSet cuts(g.edge_count());
  for (auto v : subtrees) {
    const auto sub = subtree_by_walk(t, v);
    side ^= sub;
    cuts ^= cut_edge_set(g, sub);
  }
  return cut_edge_set(g, side) == cuts;
}

}  // namespace respcut::oracle
