#ifndef CYCLEPOW_CYCLE_HPP
#define CYCLEPOW_CYCLE_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "cyclepow/errors.hpp"

namespace cyclepow {

/// Reduces an arbitrary integer to its canonical residue in [0, n).
int canonical_vertex(std::int64_t v, int n);

/// Clockwise distance |i - j| on canonical representatives. Symmetric.
int d_plus(std::int64_t i, std::int64_t j, int n);

/// Counterclockwise distance n - |i - j|. Equals n when i == j mod n.
int d_minus(std::int64_t i, std::int64_t j, int n);

/// Cyclic distance min(d_plus, d_minus), in [0, n/2].
int d_cyclic(std::int64_t i, std::int64_t j, int n);

/// The pair (n, s) defining the cycle power C_n^s: n vertices on a cycle,
/// with an edge between two vertices iff their cyclic distance is in [1, s].
class GraphSpec {
 public:
  /// Requires n >= 3 and s >= 1.
  GraphSpec(int n, int s);

  int n() const { return n_; }
  int s() const { return s_; }

  /// True iff every cyclic distance is <= s, i.e. the graph is K_n.
  /// Equivalent to n <= 2s + 1.
  bool is_complete() const { return s_ >= n_ / 2; }

  /// n >= 2s + 2: the regime where the clockwise and counterclockwise
  /// neighborhoods of a vertex are disjoint and the clique number is s + 1.
  /// Complements is_complete().
  bool strict_regime() const { return n_ >= 2 * s_ + 2; }

  /// 2s for n >= 2s + 1, n - 1 when complete (the two agree at n = 2s + 1).
  int degree() const { return is_complete() ? n_ - 1 : 2 * s_; }

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;

 private:
  int n_;
  int s_;
};

/// A set of residues mod n with bit-set storage. Inputs are reduced mod n on
/// entry; the set is the support of the characteristic vector of the subset.
class VertexSubset {
 public:
  /// Empty subset with ambient size 0; unusable until assigned.
  VertexSubset() = default;

  explicit VertexSubset(int n);
  VertexSubset(int n, std::initializer_list<std::int64_t> members);
  VertexSubset(int n, std::span<const int> members);

  int ambient_size() const { return n_; }
  int size() const;
  bool empty() const { return size() == 0; }

  bool contains(std::int64_t v) const;
  void insert(std::int64_t v);
  void erase(std::int64_t v);

  /// Members in ascending order.
  std::vector<int> members() const;

  /// {v + shift mod n : v in this}.
  VertexSubset rotated(std::int64_t shift) const;
  /// {-v mod n : v in this}.
  VertexSubset reflected() const;

  /// Raw 64-bit words of the bit set (bit v of word v/64 set iff v is a member).
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

  /// Orders subsets by their ascending member sequences, lexicographically.
  bool lex_less(const VertexSubset& other) const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// True iff 1 <= d_cyclic(u, v) <= s. Irreflexive and symmetric.
bool adjacent(const GraphSpec& spec, std::int64_t u, std::int64_t v);

/// {v in U, v != u : d_plus(u, v) <= s}. Requires u in U.
VertexSubset neighbors_plus(const GraphSpec& spec, const VertexSubset& U,
                            std::int64_t u);

/// {v in U, v != u : d_minus(u, v) <= s}. Requires u in U.
VertexSubset neighbors_minus(const GraphSpec& spec, const VertexSubset& U,
                             std::int64_t u);

/// Number of unordered adjacent pairs inside U. A pair whose two distances
/// both fall within s (possible when n <= 2s) still counts once.
std::int64_t edge_count(const GraphSpec& spec, const VertexSubset& U);

/// {start, start+1, ..., start+k-1} mod n. Requires 1 <= k <= n.
VertexSubset interval(const GraphSpec& spec, std::int64_t start, int k);

}  // namespace cyclepow

#endif  // CYCLEPOW_CYCLE_HPP
