#include "respcut/gamma.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

namespace respcut {

namespace {

void validate_query(const RootedSpanningTree& t, std::span<const Vertex> s) {
  if (s.empty()) throw Error(ErrorCode::kEmptyQuery, "empty query set");
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= t.vertex_count())
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(sorted[i]) + " out of range");
    if (sorted[i] == t.root())
      throw Error(ErrorCode::kRootInQuery, "the root cannot be in a query set");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw Error(ErrorCode::kDuplicateVertex,
                  "vertex " + std::to_string(sorted[i]) + " repeated in query set");
  }
}

// Classification over k members addressed by local index. `depth(i)` and
// `id(i)` describe member i; `inside(i, j)` is true iff member i lies in the
// subtree of member j. Members are distinct and none is the root.
template <class Depth, class Inside, class Id>
GammaCase classify_members(std::size_t k, Depth depth, Inside inside, Id id) {
  GammaCase out;
  if (k == 1) return out;
  if (k == 2) {
    out.tag = GammaCaseTag::kBasePair;
    return out;
  }

  auto dependent = [&](std::size_t i, std::size_t j) { return inside(i, j) || inside(j, i); };

  bool any_dependent = false;
  for (std::size_t i = 0; i < k && !any_dependent; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (dependent(i, j)) {
        any_dependent = true;
        break;
      }
  if (!any_dependent) {
    out.tag = GammaCaseTag::kAllIndependent;
    return out;
  }

  std::size_t top = 0;
  std::size_t at_top_depth = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (depth(i) < depth(top)) {
      top = i;
      at_top_depth = 1;
    } else if (depth(i) == depth(top)) {
      ++at_top_depth;
    }
  }
  bool contains_all = at_top_depth == 1;
  for (std::size_t i = 0; i < k && contains_all; ++i) contains_all = inside(i, top);

  if (contains_all) {
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return depth(a) < depth(b); });
    bool chain = true;
    for (std::size_t i = 0; i + 1 < k && chain; ++i)
      chain = depth(order[i]) < depth(order[i + 1]) && inside(order[i + 1], order[i]);
    if (chain) {
      out.tag = GammaCaseTag::kChain;
      out.deepest = id(order.back());
      out.shallowest = id(order.front());
    } else {
      out.tag = GammaCaseTag::kBranchingUnderAncestor;
    }
    return out;
  }

  // Shallowest member in a dependent pair; no member of S can be its
  // ancestor, and some member lies outside its subtree.
  std::size_t best = k;
  for (std::size_t i = 0; i < k; ++i) {
    bool has_partner = false;
    for (std::size_t j = 0; j < k && !has_partner; ++j) has_partner = j != i && dependent(i, j);
    if (!has_partner) continue;
    if (best == k || depth(i) < depth(best) || (depth(i) == depth(best) && id(i) < id(best)))
      best = i;
  }
  out.tag = GammaCaseTag::kEliminable;
  out.eliminated = id(best);
  return out;
}

// Binary-lifting ancestor table answering lowest common ancestor queries
// with the tree's interval predicate.
class AncestorLifting {
 public:
  explicit AncestorLifting(const RootedSpanningTree& t) : tree_(t) {
    const auto n = t.vertex_count();
    std::size_t levels = 1;
    while ((std::size_t{1} << levels) < n) ++levels;
    up_.assign(levels, std::vector<Vertex>(n, t.root()));
    for (Vertex v = 0; v < n; ++v)
      if (v != t.root()) up_[0][v] = t.parent(v);
    for (std::size_t j = 1; j < levels; ++j)
      for (Vertex v = 0; v < n; ++v) up_[j][v] = up_[j - 1][up_[j - 1][v]];
  }

  Vertex lca(Vertex a, Vertex b) const {
    if (tree_.is_descendant(b, a)) return a;
    if (tree_.is_descendant(a, b)) return b;
    for (std::size_t j = up_.size(); j-- > 0;) {
      const Vertex next = up_[j][a];
      if (!tree_.is_descendant(b, next)) a = next;
    }
    return up_[0][a];
  }

 private:
  const RootedSpanningTree& tree_;
  std::vector<std::vector<Vertex>> up_;
};

Weight checked_total(__int128 total) {
  if (total < 0 || total > static_cast<__int128>(static_cast<Weight>(-1)))
    throw Error(ErrorCode::kInvalidArgument, "cut size accumulation out of range");
  return static_cast<Weight>(total);
}

__int128 signed_term(Weight value, int subset_size) {
  const __int128 term = static_cast<__int128>(value) << (subset_size - 1);
  return (subset_size % 2 == 1) ? term : -term;
}

std::uint64_t pair_key(Vertex x, Vertex y) {
  if (x > y) std::swap(x, y);
  return (static_cast<std::uint64_t>(x) << 32) | y;
}

}  // namespace

std::size_t max_k_from_environment() {
  const char* raw = std::getenv("RESPECTING_CUTS_MAX_K");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxK;
  const std::string_view text(raw);
  std::size_t k = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc{} || end != text.data() + text.size() || k < 1 || k > kHardMaxK)
    throw Error(ErrorCode::kInvalidArgument,
                "RESPECTING_CUTS_MAX_K must be an integer in [1, " + std::to_string(kHardMaxK) +
                    "], got '" + std::string(text) + "'");
  return k;
}

std::string_view case_name(GammaCaseTag tag) noexcept {
  switch (tag) {
    case GammaCaseTag::kBaseSingle: return "BASE_SINGLE";
    case GammaCaseTag::kBasePair: return "BASE_PAIR";
    case GammaCaseTag::kAllIndependent: return "CASE1";
    case GammaCaseTag::kChain: return "CASE2";
    case GammaCaseTag::kBranchingUnderAncestor: return "CASE3";
    case GammaCaseTag::kEliminable: return "CASE4";
  }
  return "UNKNOWN";
}

GammaCase classify_gamma_case(const RootedSpanningTree& t, std::span<const Vertex> s) {
  validate_query(t, s);
  std::vector<Vertex> members(s.begin(), s.end());
  std::sort(members.begin(), members.end());
  return classify_members(
      members.size(), [&](std::size_t i) { return t.depth(members[i]); },
      [&](std::size_t i, std::size_t j) { return t.is_descendant(members[i], members[j]); },
      [&](std::size_t i) { return members[i]; });
}

std::vector<Weight> all_subtree_cut_sizes(const Graph& g, const RootedSpanningTree& t) {
  const auto n = t.vertex_count();
  if (n != g.vertex_count()) throw Error(ErrorCode::kInvalidArgument, "tree does not match graph");
  const AncestorLifting lifting(t);
  std::vector<__int128> diff(n, 0);
  for (const auto& e : g.edges()) {
    diff[e.u] += e.weight;
    diff[e.v] += e.weight;
    diff[lifting.lca(e.u, e.v)] -= 2 * static_cast<__int128>(e.weight);
  }
  const auto order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (*it != t.root()) diff[t.parent(*it)] += diff[*it];
  std::vector<Weight> out(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (v != t.root()) out[v] = checked_total(diff[v]);
  return out;
}

Weight pairwise_gamma(const Graph& g, const RootedSpanningTree& t, Vertex x, Vertex y) {
  const Vertex pair[] = {x, y};
  validate_query(t, pair);
  Weight total = 0;
  if (t.is_independent(x, y)) {
    for (const auto& e : g.edges()) {
      const bool ux = t.is_descendant(e.u, x), vx = t.is_descendant(e.v, x);
      const bool uy = t.is_descendant(e.u, y), vy = t.is_descendant(e.v, y);
      if ((ux && vy) || (uy && vx)) total += e.weight;
    }
    return total;
  }
  const Vertex outer = t.is_descendant(y, x) ? x : y;
  const Vertex inner = outer == x ? y : x;
  for (const auto& e : g.edges()) {
    const bool u_in = t.is_descendant(e.u, inner), v_in = t.is_descendant(e.v, inner);
    const bool u_out = !t.is_descendant(e.u, outer), v_out = !t.is_descendant(e.v, outer);
    if ((u_in && v_out) || (v_in && u_out)) total += e.weight;
  }
  return total;
}

GammaTable::GammaTable(const Graph& g, const RootedSpanningTree& t)
    : graph_(g), tree_(t), singles_(all_subtree_cut_sizes(g, t)) {}

Weight GammaTable::single(Vertex v) const {
  const Vertex s[] = {v};
  validate_query(tree_, s);
  return singles_[v];
}

std::size_t GammaTable::dense_index(Vertex x, Vertex y) const {
  if (x > y) std::swap(x, y);
  const std::size_t n = tree_.vertex_count();
  return static_cast<std::size_t>(x) * n - static_cast<std::size_t>(x) * (x + 1) / 2 +
         (y - x - 1);
}

Weight GammaTable::pair(Vertex x, Vertex y) const {
  const Vertex s[] = {x, y};
  validate_query(tree_, s);
  if (all_pairs_) return dense_[dense_index(x, y)];
  const auto key = pair_key(x, y);
  {
    std::lock_guard lock(mutex_);
    if (auto it = lazy_.find(key); it != lazy_.end()) return it->second;
  }
  const Weight value = pairwise_gamma(graph_, tree_, x, y);
  std::lock_guard lock(mutex_);
  lazy_.emplace(key, value);
  return value;
}

std::vector<Weight> GammaTable::pair_matrix(std::span<const Vertex> s) const {
  validate_query(tree_, s);
  const std::size_t k = s.size();
  std::vector<Weight> m(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) m[i * k + i] = singles_[s[i]];
  if (k < 2) return m;
  if (all_pairs_) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        m[i * k + j] = m[j * k + i] = dense_[dense_index(s[i], s[j])];
    return m;
  }
  std::vector<std::size_t> crossing;
  crossing.reserve(k);
  for (const auto& e : graph_.edges()) {
    crossing.clear();
    for (std::size_t i = 0; i < k; ++i)
      if (tree_.is_descendant(e.u, s[i]) != tree_.is_descendant(e.v, s[i])) crossing.push_back(i);
    for (std::size_t a = 0; a < crossing.size(); ++a)
      for (std::size_t b = a + 1; b < crossing.size(); ++b)
        m[crossing[a] * k + crossing[b]] += e.weight;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) m[j * k + i] = m[i * k + j];
  return m;
}

void GammaTable::prefetch_pairs(std::span<const Vertex> s) const {
  if (all_pairs_) return;
  const auto m = pair_matrix(s);
  const std::size_t k = s.size();
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) lazy_.emplace(pair_key(s[i], s[j]), m[i * k + j]);
}

void GammaTable::precompute_all_pairs(unsigned threads) {
  const std::size_t n = tree_.vertex_count();
  if (n > kMaxDenseVertices)
    throw Error(ErrorCode::kInvalidArgument,
                "all-pairs table limited to " + std::to_string(kMaxDenseVertices) + " vertices");
  if (all_pairs_) return;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Weight> dense(n * (n - 1) / 2, 0);

  // Row x: an edge crossing the cut of x's subtree crosses exactly the
  // subtrees of the vertices strictly below the LCA on its tree path.
  auto fill_rows = [&](unsigned worker) {
    std::vector<Weight> row(n, 0);
    for (Vertex x = static_cast<Vertex>(worker); x < n; x += threads) {
      if (x == tree_.root()) continue;
      std::fill(row.begin(), row.end(), 0);
      for (const auto& e : graph_.edges()) {
        if (tree_.is_descendant(e.u, x) == tree_.is_descendant(e.v, x)) continue;
        for (Vertex cur = e.u; !tree_.is_descendant(e.v, cur); cur = tree_.parent(cur))
          row[cur] += e.weight;
        for (Vertex cur = e.v; !tree_.is_descendant(e.u, cur); cur = tree_.parent(cur))
          row[cur] += e.weight;
      }
      for (Vertex y = x + 1; y < n; ++y)
        if (y != tree_.root()) dense[dense_index(x, y)] = row[y];
    }
  };

  if (threads == 1) {
    fill_rows(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(fill_rows, w);
  }
  std::lock_guard lock(mutex_);
  dense_ = std::move(dense);
  all_pairs_ = true;
}

GammaEngine::GammaEngine(const Graph& g, const RootedSpanningTree& t)
    : GammaEngine(g, t, max_k_from_environment()) {}

GammaEngine::GammaEngine(const Graph& g, const RootedSpanningTree& t, std::size_t max_k)
    : graph_(g), tree_(t), table_(g, t), max_k_(kDefaultMaxK) {
  set_max_k(max_k);
}

void GammaEngine::set_max_k(std::size_t k) {
  if (k < 1 || k > kHardMaxK)
    throw Error(ErrorCode::kInvalidArgument,
                "k limit must be in [1, " + std::to_string(kHardMaxK) + "]");
  max_k_ = k;
}

std::vector<Vertex> GammaEngine::validated(std::span<const Vertex> s) const {
  validate_query(tree_, s);
  std::vector<Vertex> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

Weight GammaEngine::k_wise_gamma(std::span<const Vertex> s, std::vector<GammaCase>* trace) const {
  auto members = validated(s);
  while (true) {
    const auto c = classify_gamma_case(tree_, members);
    if (trace != nullptr) trace->push_back(c);
    switch (c.tag) {
      case GammaCaseTag::kBaseSingle: return table_.single(members[0]);
      case GammaCaseTag::kBasePair: return table_.pair(members[0], members[1]);
      case GammaCaseTag::kAllIndependent:
      case GammaCaseTag::kBranchingUnderAncestor: return 0;
      case GammaCaseTag::kChain: return table_.pair(c.deepest, c.shallowest);
      case GammaCaseTag::kEliminable:
        members.erase(std::find(members.begin(), members.end(), c.eliminated));
        break;
    }
  }
}

Weight GammaEngine::k_respecting_cut_size(
    std::span<const Vertex> s, std::array<std::size_t, kGammaCaseCount>* case_counts) const {
  const auto members = validated(s);
  const std::size_t k = members.size();
  if (k > max_k_)
    throw Error(ErrorCode::kKLimitExceeded,
                "k = " + std::to_string(k) + " exceeds limit " + std::to_string(max_k_), k);

  const auto pairs = table_.pair_matrix(members);
  std::vector<std::uint32_t> depth(k);
  std::vector<std::uint32_t> inside(k, 0);  // bit j of inside[i]: member i below member j
  for (std::size_t i = 0; i < k; ++i) {
    depth[i] = tree_.depth(members[i]);
    for (std::size_t j = 0; j < k; ++j)
      if (tree_.is_descendant(members[i], members[j])) inside[i] |= std::uint32_t{1} << j;
  }

  // gamma of every subset, indexed by bitmask over members. Eliminating a
  // member always lands on a smaller mask, so ascending order suffices.
  std::vector<Weight> gamma(std::size_t{1} << k, 0);
  std::array<std::size_t, kGammaCaseCount> counts{};
  std::vector<std::size_t> idx;
  idx.reserve(k);
  __int128 total = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    idx.clear();
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) idx.push_back(i);
    const auto c = classify_members(
        idx.size(), [&](std::size_t i) { return depth[idx[i]]; },
        [&](std::size_t i, std::size_t j) { return ((inside[idx[i]] >> idx[j]) & 1u) != 0; },
        [&](std::size_t i) { return static_cast<Vertex>(idx[i]); });
    ++counts[static_cast<std::size_t>(c.tag)];
    Weight value = 0;
    switch (c.tag) {
      case GammaCaseTag::kBaseSingle: value = pairs[idx[0] * k + idx[0]]; break;
      case GammaCaseTag::kBasePair: value = pairs[idx[0] * k + idx[1]]; break;
      case GammaCaseTag::kAllIndependent:
      case GammaCaseTag::kBranchingUnderAncestor: value = 0; break;
      case GammaCaseTag::kChain: value = pairs[c.deepest * k + c.shallowest]; break;
      case GammaCaseTag::kEliminable: value = gamma[mask & ~(std::uint32_t{1} << c.eliminated)]; break;
    }
    gamma[mask] = value;
    total += signed_term(value, static_cast<int>(idx.size()));
  }
  if (case_counts != nullptr) *case_counts = counts;
  return checked_total(total);
}

Weight GammaEngine::k_respecting_cut_size_with(std::span<const Vertex> s,
                                               const SubsetGamma& subset_gamma) const {
  const auto members = validated(s);
  const std::size_t k = members.size();
  if (k > max_k_)
    throw Error(ErrorCode::kKLimitExceeded,
                "k = " + std::to_string(k) + " exceeds limit " + std::to_string(max_k_), k);
  std::vector<Vertex> subset;
  __int128 total = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) subset.push_back(members[i]);
    total += signed_term(subset_gamma(subset), static_cast<int>(subset.size()));
  }
  return checked_total(total);
}

CutAnswer GammaEngine::cut_size_via_tree(const VertexSet& a) const {
  auto decomposition = decompose_cut_as_xor_basis(graph_, tree_, a);
  CutAnswer out;
  out.basis = std::move(decomposition.basis);
  out.complemented = decomposition.complemented;
  if (out.basis.size() > max_k_)
    throw Error(ErrorCode::kKLimitExceeded,
                "cut respects the tree in " + std::to_string(out.basis.size()) +
                    " edges, limit is " + std::to_string(max_k_),
                out.basis.size());
  out.size = k_respecting_cut_size(out.basis, &out.case_counts);
  return out;
}

}  // namespace respcut
