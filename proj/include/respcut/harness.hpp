#ifndef RESPCUT_HARNESS_HPP
#define RESPCUT_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "respcut/gamma.hpp"
#include "respcut/generators.hpp"

namespace respcut {

struct SelfcheckOptions {
  std::size_t max_n = 8;        // vertex counts are drawn from [3, max_n]
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::size_t random_sets = 64;  // cut sides per trial once n exceeds 8
  std::size_t max_k = kDefaultMaxK;
};

struct SelfcheckReport {
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t skipped = 0;  // cut sides respecting the tree in more than max_k edges
  std::size_t mismatches = 0;
  /// JSON object describing the first failure, empty when none.
  std::string counterexample;
};

/// Random graphs and trees (strategy cycles bfs, dfs, uniform), comparing
/// tree-based cut sizes and k-wise gammas against the direct definitions.
/// Every proper cut side is tried when n <= 8. Stops at the first mismatch.
SelfcheckReport run_selfcheck(const SelfcheckOptions& options);

struct BenchOptions {
  std::size_t n = 100000;
  std::size_t m = 500000;
  std::size_t k = 10;
  std::size_t queries = 20;
  std::uint64_t seed = 0;
  TreeStrategy strategy = TreeStrategy::kUniform;
};

struct BenchReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t queries = 0;
  double generate_ms = 0;
  double tree_ms = 0;
  double subtree_cuts_ms = 0;
  double pairwise_ms = 0;   // mean per query
  double k_wise_ms = 0;     // mean per query, one k-wise gamma
  double cut_size_ms = 0;   // mean per query, full alternating sum
  Weight checksum = 0;      // keeps the work observable
};

BenchReport run_bench(const BenchOptions& options);

}  // namespace respcut

#endif  // RESPCUT_HARNESS_HPP
