#ifndef CYCLEPOW_SEARCH_HPP
#define CYCLEPOW_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclepow/cycle.hpp"

namespace cyclepow {

/// Default cap on enumerated subsets: C(31, 15), so any n <= 32 search with
/// symmetry reduction stays within budget.
inline constexpr std::uint64_t kDefaultSearchBudget = 300'540'195;

/// Default cap for full (unreduced) enumerations: C(22, 11).
inline constexpr std::uint64_t kDefaultCountBudget = 705'432;

struct SearchOptions {
  /// Enumerate only subsets containing vertex 0. Sound because every subset
  /// has a rotation through 0 and edge counts are rotation invariant; shrinks
  /// the space from C(n,k) to C(n-1,k-1).
  bool reduce_symmetry = true;
  /// Also count every maximizer. Forces a full enumeration over all C(n,k)
  /// subsets, so rotated copies are counted separately.
  bool count_maximizers = false;
  /// Skip partial subsets that provably cannot beat the chunk incumbent.
  /// Ties are never skipped, so the witness is unaffected. Off by default:
  /// the unpruned oracle visits every subset.
  bool prune = false;
  /// Worker threads; 0 means hardware concurrency.
  int jobs = 0;
  std::uint64_t budget = kDefaultSearchBudget;
};

struct SearchResult {
  std::int64_t max_edges = 0;
  /// Lexicographically smallest maximizer in the enumerated space (contains
  /// vertex 0 whenever symmetry reduction was used).
  VertexSubset witness;
  std::optional<std::uint64_t> maximizer_count;
  std::uint64_t subsets_examined = 0;
  bool used_symmetry = false;
};

/// Number of subsets a search would enumerate (saturating at uint64 max).
std::uint64_t projected_subsets(int n, int k, bool reduce_symmetry);

/// Exact maximum of edge_count over all k-subsets by exhaustive enumeration.
/// Enumerates combinations in colexicographic order with incremental edge
/// counts (one masked popcount per added vertex). Throws
/// budget_exceeded_error before enumerating if the projected subset count
/// exceeds the budget. Results are independent of the worker count.
SearchResult brute_force_max(const GraphSpec& spec, int k,
                             const SearchOptions& options = {});
SearchResult brute_force_max(const GraphSpec& spec, int k, bool reduce_symmetry);

/// Number of k-subsets attaining the maximum, over all C(n,k) subsets.
std::uint64_t count_maximizers(const GraphSpec& spec, int k,
                               std::uint64_t budget = kDefaultCountBudget);

struct GridViolation {
  int n = 0, s = 0, k = 0;
  std::string kind;  // "interval_optimality", "turan_bound", "spectral_bound"
  std::int64_t oracle = 0;
  std::int64_t other = 0;
};

struct GridReport {
  int max_n = 0;
  std::uint64_t cases = 0;
  std::uint64_t subsets_examined = 0;
  std::vector<GridViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For every n in [3, max_n], s in [1, n-1], k in [1, n]: checks that the
/// brute-force maximum equals the k-interval edge count, stays within the
/// floored spectral bound, and within Turan's bound where that is defined.
GridReport verify_grid(int max_n, int jobs = 0,
                       std::uint64_t budget = kDefaultSearchBudget);

}  // namespace cyclepow

#endif  // CYCLEPOW_SEARCH_HPP
