#ifndef RESPCUT_GAMMA_HPP
#define RESPCUT_GAMMA_HPP

// Sizes of tree-respecting cuts from subtree cut intersections.
//
// For a rooted spanning tree T and vertices x_1..x_k (none the root), write
// gamma(x_1..x_k) for the weight of the intersection of the cuts of their
// subtrees. The cut whose crossing tree edges are exactly the parent edges of
// S = {x_1..x_k} has size
//
//   sum_{l=1..k} (-1)^(l-1) 2^(l-1) sum_{S' subset S, |S'| = l} gamma(S')
//
// and every gamma(S') with |S'| >= 3 is either 0, a single pairwise gamma,
// or gamma of S' minus one vertex, decided purely by the ancestor/descendant
// pattern of S'. So per-vertex cut sizes, pairwise gammas and the ancestry
// relation are enough to size any k-respecting cut.

#include <array>
#include <cstddef>
#include <functional>
#include <mutex>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "respcut/graph.hpp"
#include "respcut/rooted_tree.hpp"

namespace respcut {

inline constexpr std::size_t kDefaultMaxK = 16;
/// Upper bound for any configured k limit; the subset table has 2^k entries.
inline constexpr std::size_t kHardMaxK = 24;

/// Reads RESPECTING_CUTS_MAX_K. Unset or empty gives kDefaultMaxK; anything
/// other than an integer in [1, kHardMaxK] throws kInvalidArgument.
std::size_t max_k_from_environment();

enum class GammaCaseTag : int {
  kBaseSingle = 0,
  kBasePair = 1,
  kAllIndependent = 2,          // CASE1: value 0
  kChain = 3,                   // CASE2: gamma(deepest, shallowest)
  kBranchingUnderAncestor = 4,  // CASE3: value 0
  kEliminable = 5,              // CASE4: recurse without `eliminated`
};

inline constexpr std::size_t kGammaCaseCount = 6;

/// "BASE_SINGLE", "BASE_PAIR", "CASE1" .. "CASE4".
std::string_view case_name(GammaCaseTag tag) noexcept;

struct GammaCase {
  GammaCaseTag tag = GammaCaseTag::kBaseSingle;
  Vertex deepest = kNoVertex;     // CASE2 only
  Vertex shallowest = kNoVertex;  // CASE2 only
  Vertex eliminated = kNoVertex;  // CASE4 only

  friend bool operator==(const GammaCase&, const GammaCase&) = default;
};

/// Classifies a query set by its ancestor/descendant structure.
/// Throws kEmptyQuery, kRootInQuery or kDuplicateVertex.
GammaCase classify_gamma_case(const RootedSpanningTree& t, std::span<const Vertex> s);

/// Weight of the cut of every subtree, indexed by vertex (root entry is 0).
/// One pass: each edge adds its weight at both endpoints and subtracts twice
/// at their lowest common ancestor, then subtree sums are accumulated.
std::vector<Weight> all_subtree_cut_sizes(const Graph& g, const RootedSpanningTree& t);

/// gamma(x, y) by classifying every edge against the two subtree intervals.
/// O(m). Throws kRootInQuery or kDuplicateVertex (x == y).
Weight pairwise_gamma(const Graph& g, const RootedSpanningTree& t, Vertex x, Vertex y);

/// Per-vertex cut sizes plus a cache of pairwise gammas.
///
/// Pairs are filled lazily (one O(m) scan each), in batches for a query set
/// (one O(m k) scan), or all at once. Lookups are safe from several threads.
class GammaTable {
 public:
  static constexpr std::size_t kMaxDenseVertices = 8192;

  GammaTable(const Graph& g, const RootedSpanningTree& t);

  Weight single(Vertex v) const;
  Weight pair(Vertex x, Vertex y) const;

  /// Fills every pair within `s` with one scan over the edges.
  void prefetch_pairs(std::span<const Vertex> s) const;

  /// Fills all pairs over V \ {root}, splitting rows over `threads` workers
  /// (0 picks the hardware concurrency). Memory is quadratic in n, so graphs
  /// above kMaxDenseVertices are rejected with kInvalidArgument.
  void precompute_all_pairs(unsigned threads = 0);

  bool has_all_pairs() const noexcept { return all_pairs_; }

  /// Gammas of all pairs within `s` in one edge scan, as a row-major k*k
  /// matrix (diagonal holds the single cut sizes).
  std::vector<Weight> pair_matrix(std::span<const Vertex> s) const;

  const Graph& graph() const noexcept { return graph_; }
  const RootedSpanningTree& tree() const noexcept { return tree_; }

 private:
  std::size_t dense_index(Vertex x, Vertex y) const;

  const Graph& graph_;
  const RootedSpanningTree& tree_;
  std::vector<Weight> singles_;
  std::vector<Weight> dense_;  // strict upper triangle when precomputed
  bool all_pairs_ = false;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, Weight> lazy_;
};

/// Result of sizing an explicit cut side through the tree.
struct CutAnswer {
  Weight size = 0;
  std::vector<Vertex> basis;
  bool complemented = false;
  /// How many of the 2^k - 1 subset terms fell into each case, indexed by
  /// GammaCaseTag.
  std::array<std::size_t, kGammaCaseCount> case_counts{};
};

/// Evaluates k-wise gammas and k-respecting cut sizes over one (graph, tree).
/// Holds references; both must outlive the engine.
class GammaEngine {
 public:
  using SubsetGamma = std::function<Weight(std::span<const Vertex>)>;

  GammaEngine(const Graph& g, const RootedSpanningTree& t);
  GammaEngine(const Graph& g, const RootedSpanningTree& t, std::size_t max_k);

  const GammaTable& table() const noexcept { return table_; }
  GammaTable& table() noexcept { return table_; }

  std::size_t max_k() const noexcept { return max_k_; }
  /// Throws kInvalidArgument outside [1, kHardMaxK].
  void set_max_k(std::size_t k);

  /// gamma(S) by repeated classification. When `trace` is given it receives
  /// every classification step, the final base or zero case last.
  Weight k_wise_gamma(std::span<const Vertex> s, std::vector<GammaCase>* trace = nullptr) const;

  /// Size of the cut whose crossing tree edges are exactly the parent edges
  /// of S. Throws kKLimitExceeded (detail = k) when |S| > max_k().
  Weight k_respecting_cut_size(std::span<const Vertex> s,
                               std::array<std::size_t, kGammaCaseCount>* case_counts = nullptr) const;

  /// Same alternating sum with each subset term supplied by `subset_gamma`.
  Weight k_respecting_cut_size_with(std::span<const Vertex> s,
                                    const SubsetGamma& subset_gamma) const;

  /// Decomposes A into its subtree basis and sizes it. Throws
  /// kKLimitExceeded with the basis size as detail so callers can fall back
  /// to cut_size_direct.
  CutAnswer cut_size_via_tree(const VertexSet& a) const;

 private:
  std::vector<Vertex> validated(std::span<const Vertex> s) const;

  const Graph& graph_;
  const RootedSpanningTree& tree_;
  GammaTable table_;
  std::size_t max_k_;
};

}  // namespace respcut

#endif  // RESPCUT_GAMMA_HPP
