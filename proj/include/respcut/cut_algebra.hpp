#ifndef RESPCUT_CUT_ALGEBRA_HPP
#define RESPCUT_CUT_ALGEBRA_HPP

// Definition-level reference implementations of the set algebra behind
// tree-respecting cuts. Nothing here shares code with gamma.hpp; these are
// the ground truth the fast paths are tested against, and they make no
// attempt to be fast.

#include <cstddef>
#include <span>
#include <vector>

#include "respcut/graph.hpp"
#include "respcut/rooted_tree.hpp"

namespace respcut::oracle {

inline constexpr std::size_t kDefaultInclusionExclusionLimit = 16;

/// Elements occurring in an odd number of the inputs. Throws kEmptyQuery on
/// no input and kUniverseMismatch on mixed universes.
template <class Tag>
IdSet<Tag> symmetric_difference(std::span<const IdSet<Tag>> sets) {
  if (sets.empty()) throw Error(ErrorCode::kEmptyQuery, "symmetric difference of no sets");
  IdSet<Tag> out(sets.front().universe());
  for (const auto& s : sets) out ^= s;
  return out;
}

/// |A_1 xor ... xor A_k| by alternating inclusion-exclusion over all 2^k - 1
/// index subsets, each term an explicit intersection. Measures are weight
/// sums when `weights` is nonempty (indexed by element id), cardinalities
/// otherwise. Throws kKLimitExceeded when k > limit.
template <class Tag>
Weight xor_size_by_inclusion_exclusion(std::span<const IdSet<Tag>> sets,
                                       std::span<const Weight> weights = {},
                                       std::size_t limit = kDefaultInclusionExclusionLimit);

/// Weight of the intersection of delta(x subtree) over x in S, from
/// materialized vertex sets and explicit edge classification.
/// Throws kEmptyQuery or kRootInQuery.
Weight oracle_k_wise_gamma(const Graph& g, const RootedSpanningTree& t,
                           std::span<const Vertex> subtrees);

/// Checks that the cut of a xor of subtrees equals the xor of their cuts.
bool check_cut_space_identity(const Graph& g, const RootedSpanningTree& t,
                              std::span<const Vertex> subtrees);

/// Subtree of v by walking child lists breadth-first (no interval tables).
VertexSet subtree_by_walk(const RootedSpanningTree& t, Vertex v);

extern template Weight xor_size_by_inclusion_exclusion<VertexTag>(
    std::span<const IdSet<VertexTag>>, std::span<const Weight>, std::size_t);
extern template Weight xor_size_by_inclusion_exclusion<EdgeTag>(
    std::span<const IdSet<EdgeTag>>, std::span<const Weight>, std::size_t);

}  // namespace respcut::oracle

#endif  // RESPCUT_CUT_ALGEBRA_HPP
