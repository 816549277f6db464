#include "cyclepow/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <limits>
#include <memory>
#include <stdexcept>
#include <thread>

#include "cyclepow/bounds.hpp"

namespace cyclepow {

namespace {

constexpr int kWordBits = 64;

// Above this n the precomputed n x n/64 neighborhood masks stop paying for
// themselves (and their memory); gains are then counted against the chosen
// elements directly, which is O(k) per step and fine for the tiny k a sane
// budget permits at such sizes.
constexpr int kMaskModeLimit = 2048;

// Runs below this size stay on the calling thread; spawning workers would
// cost more than the enumeration.
constexpr std::uint64_t kSequentialCutoff = 4096;

std::uint64_t binomial_saturating(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t res = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t m = static_cast<std::uint64_t>(n - k + i);
    if (res > std::numeric_limits<std::uint64_t>::max() / m)
      return std::numeric_limits<std::uint64_t>::max();
    res = res * m / static_cast<std::uint64_t>(i);  // exact at every step
  }
  return res;
}

struct NeighborMasks {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> bits;  // row v at offset v * words

  explicit NeighborMasks(const GraphSpec& spec)
      : n(spec.n()),
        words((spec.n() + kWordBits - 1) / kWordBits),
        bits(static_cast<std::size_t>(spec.n()) * words, 0) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t* row = bits.data() + static_cast<std::size_t>(v) * words;
      for (int u = 0; u < n; ++u)
        if (adjacent(spec, u, v))
          row[u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
    }
  }

  const std::uint64_t* mask(int v) const {
    return bits.data() + static_cast<std::size_t>(v) * words;
  }
};

int popcount_and(const std::uint64_t* a, const std::uint64_t* b, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

struct ChunkOutcome {
  std::int64_t best = -1;
  std::vector<int> witness;  // ascending members
  std::uint64_t ties = 0;
  std::uint64_t nodes = 0;
};

// One enumeration unit. Free elements are chosen largest-first, each level
// iterating its candidates in ascending order, which walks the k-subsets in
// colexicographic order. Vertex 0 may be pinned into every subset. Edge
// counts are maintained incrementally: adding v contributes the number of
// already-chosen neighbors of v.
class Enumerator {
 public:
  Enumerator(const GraphSpec& spec, const NeighborMasks* masks, int k,
             bool pinned, bool prune)
      : spec_(spec),
        masks_(masks),
        k_(k),
        pinned_(pinned),
        prune_(prune),
        degree_cap_(spec.degree()),
        free_count_(k - (pinned ? 1 : 0)),
        cur_(masks ? static_cast<std::size_t>(masks->words) : 0, 0),
        choice_(static_cast<std::size_t>(std::max(free_count_, 1)), 0),
        gained_(choice_.size(), 0) {}

  // Runs the chunk whose largest free element is `top` into `out`.
  void run_chunk(int top, ChunkOutcome& out) {
    out_ = &out;
    reset();
    add(top, 0);
    if (free_count_ == 1)
      evaluate();
    else
      run_levels();
    remove(0);
  }

  // Degenerate case: no free elements (pinned and k == 1).
  void run_pinned_only(ChunkOutcome& out) {
    out_ = &out;
    reset();
    evaluate();
  }

 private:
  void reset() {
    std::fill(cur_.begin(), cur_.end(), 0);
    edges_ = 0;
    if (pinned_ && masks_) cur_[0] |= 1;  // vertex 0
  }

  int gain_of(int v, int depth) const {
    if (masks_) return popcount_and(cur_.data(), masks_->mask(v), masks_->words);
    int g = 0;
    if (pinned_ && d_cyclic(0, v, spec_.n()) <= spec_.s()) ++g;
    for (int d = 0; d < depth; ++d)
      if (d_cyclic(choice_[static_cast<std::size_t>(d)], v, spec_.n()) <= spec_.s())
        ++g;
    return g;
  }

  void add(int v, int depth) {
    const int gained = gain_of(v, depth);
    if (masks_) cur_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
    edges_ += gained;
    choice_[static_cast<std::size_t>(depth)] = v;
    gained_[static_cast<std::size_t>(depth)] = gained;
  }

  void remove(int depth) {
    if (masks_) {
      const int v = choice_[static_cast<std::size_t>(depth)];
      cur_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
    }
    edges_ -= gained_[static_cast<std::size_t>(depth)];
  }

  // Upper bound on edges the remaining picks can still add: the i-th future
  // vertex joins a set of size cur_size + i and gains at most
  // min(degree_cap, cur_size + i).
  std::int64_t remaining_upper(int cur_size, int remaining) const {
    const std::int64_t t = std::clamp(degree_cap_ - cur_size, 0, remaining);
    return t * cur_size + t * (t - 1) / 2 +
           (remaining - t) * static_cast<std::int64_t>(degree_cap_);
  }

  // Iterative DFS over levels 1..free_count-1; level 0 (the chunk top) is
  // already placed. Loop invariant: levels < d are added; choice_[d] is the
  // candidate counter for level d.
  void run_levels() {
    const int base = pinned_ ? 1 : 0;
    const int last = free_count_ - 1;
    int d = 1;
    choice_[1] = base + free_count_ - 2 - 1;  // one below the level-1 minimum
    while (true) {
      ++choice_[static_cast<std::size_t>(d)];
      if (choice_[static_cast<std::size_t>(d)] >=
          choice_[static_cast<std::size_t>(d - 1)]) {
        if (--d == 0) break;
        remove(d);
        continue;
      }
      add(choice_[static_cast<std::size_t>(d)], d);
      if (prune_ && out_->best >= 0 && d < last) {
        const int cur_size = base + d + 1;
        // strict '<': partials that can still tie must be explored so the
        // witness and maximizer count stay exact
        if (edges_ + remaining_upper(cur_size, last - d) < out_->best) {
          remove(d);
          continue;
        }
      }
      if (d == last) {
        evaluate();
        remove(d);
        continue;
      }
      ++d;
      choice_[static_cast<std::size_t>(d)] =
          base + free_count_ - 1 - d - 1;  // one below this level's minimum
    }
  }

  void evaluate() {
    ChunkOutcome& out = *out_;
    ++out.nodes;
#ifndef NDEBUG
    if (out.nodes % 100 == 0) assert(edges_ == recount());
#endif
    if (edges_ > out.best) {
      out.best = edges_;
      out.ties = 1;
      out.witness = ascending_members();
    } else if (edges_ == out.best) {
      ++out.ties;
      std::vector<int> cand = ascending_members();
      if (std::lexicographical_compare(cand.begin(), cand.end(),
                                       out.witness.begin(), out.witness.end()))
        out.witness = std::move(cand);
    }
  }

  std::vector<int> ascending_members() const {
    std::vector<int> ms;
    ms.reserve(static_cast<std::size_t>(k_));
    if (pinned_) ms.push_back(0);
    for (int d = free_count_ - 1; d >= 0; --d)
      ms.push_back(choice_[static_cast<std::size_t>(d)]);
    return ms;
  }

#ifndef NDEBUG
  // From-scratch pairwise count over the chosen elements, independent of the
  // incremental bookkeeping and of the mask tables.
  std::int64_t recount() const {
    const std::vector<int> ms = ascending_members();
    std::int64_t c = 0;
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = a + 1; b < ms.size(); ++b) {
        const int d = d_cyclic(ms[a], ms[b], spec_.n());
        if (d >= 1 && d <= spec_.s()) ++c;
      }
    return c;
  }
#endif

  const GraphSpec& spec_;
  const NeighborMasks* masks_;
  int k_;
  bool pinned_;
  bool prune_;
  int degree_cap_;
  int free_count_;
  std::vector<std::uint64_t> cur_;
  std::vector<int> choice_;  // chosen free elements, descending by level
  std::vector<int> gained_;
  std::int64_t edges_ = 0;
  ChunkOutcome* out_ = nullptr;
};

struct EngineResult {
  std::int64_t best = 0;
  std::vector<int> witness;
  std::uint64_t ties = 0;
  std::uint64_t nodes = 0;
};

EngineResult run_engine(const GraphSpec& spec, int k, bool pinned, bool prune,
                        int jobs, std::uint64_t budget) {
  if (k < 1 || k > spec.n())
    throw std::invalid_argument("k must be in [1, n]");

  const std::uint64_t projected = projected_subsets(spec.n(), k, pinned);
  if (projected > budget) throw budget_exceeded_error(projected, budget);

  std::unique_ptr<NeighborMasks> masks;
  if (spec.n() <= kMaskModeLimit) masks = std::make_unique<NeighborMasks>(spec);

  const int free_count = k - (pinned ? 1 : 0);
  const int base = pinned ? 1 : 0;

  std::vector<ChunkOutcome> outcomes;
  if (free_count == 0) {
    outcomes.emplace_back();
    Enumerator e(spec, masks.get(), k, pinned, prune);
    e.run_pinned_only(outcomes.back());
  } else {
    // Chunks are indexed by the largest free element; each is independent.
    const int top_lo = base + free_count - 1;
    const int chunk_count = spec.n() - top_lo;
    outcomes.resize(static_cast<std::size_t>(chunk_count));

    int workers =
        jobs > 0 ? jobs
                 : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min(workers, chunk_count);
    if (projected <= kSequentialCutoff) workers = 1;

    if (workers <= 1) {
      Enumerator e(spec, masks.get(), k, pinned, prune);
      for (int c = 0; c < chunk_count; ++c)
        e.run_chunk(top_lo + c, outcomes[static_cast<std::size_t>(c)]);
    } else {
      std::atomic<int> next{0};
      auto work = [&] {
        Enumerator e(spec, masks.get(), k, pinned, prune);
        for (int c = next.fetch_add(1); c < chunk_count; c = next.fetch_add(1))
          e.run_chunk(top_lo + c, outcomes[static_cast<std::size_t>(c)]);
      };
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (std::thread& t : pool) t.join();
    }
  }

  // Deterministic merge: max edges, summed ties, then the lexicographically
  // smallest witness; independent of chunk completion order.
  EngineResult res;
  res.best = -1;
  for (const ChunkOutcome& c : outcomes) {
    res.nodes += c.nodes;
    if (c.best < res.best) continue;
    if (c.best > res.best) {
      res.best = c.best;
      res.ties = c.ties;
      res.witness = c.witness;
    } else {
      res.ties += c.ties;
      if (std::lexicographical_compare(c.witness.begin(), c.witness.end(),
                                       res.witness.begin(), res.witness.end()))
        res.witness = c.witness;
    }
  }
  if (!prune) assert(res.nodes == projected);
  return res;
}

}  // namespace

std::uint64_t projected_subsets(int n, int k, bool reduce_symmetry) {
  return reduce_symmetry ? binomial_saturating(n - 1, k - 1)
                         : binomial_saturating(n, k);
}

SearchResult brute_force_max(const GraphSpec& spec, int k,
                             const SearchOptions& options) {
  // Counting maximizers needs the full space: rotated copies count separately.
  const bool pinned = options.reduce_symmetry && !options.count_maximizers;
  const EngineResult er =
      run_engine(spec, k, pinned, options.prune, options.jobs, options.budget);
  SearchResult res;
  res.max_edges = er.best;
  res.witness = VertexSubset(spec.n(), std::span<const int>(er.witness));
  if (options.count_maximizers) res.maximizer_count = er.ties;
  res.subsets_examined = er.nodes;
  res.used_symmetry = pinned;
  return res;
}

SearchResult brute_force_max(const GraphSpec& spec, int k, bool reduce_symmetry) {
  SearchOptions options;
  options.reduce_symmetry = reduce_symmetry;
  return brute_force_max(spec, k, options);
}

std::uint64_t count_maximizers(const GraphSpec& spec, int k, std::uint64_t budget) {
  SearchOptions options;
  options.count_maximizers = true;
  options.budget = budget;
  return brute_force_max(spec, k, options).maximizer_count.value();
}

GridReport verify_grid(int max_n, int jobs, std::uint64_t budget) {
  if (max_n < 3) throw std::invalid_argument("grid bound must be at least 3");
  GridReport report;
  report.max_n = max_n;
  SearchOptions options;
  options.jobs = jobs;
  options.budget = budget;
  for (int n = 3; n <= max_n; ++n) {
    for (int s = 1; s < n; ++s) {
      const GraphSpec spec(n, s);
      for (int k = 1; k <= n; ++k) {
        const SearchResult oracle = brute_force_max(spec, k, options);
        ++report.cases;
        report.subsets_examined += oracle.subsets_examined;

        const std::int64_t by_interval = edge_count(spec, interval(spec, 0, k));
        if (oracle.max_edges != by_interval)
          report.violations.push_back(
              {n, s, k, "interval_optimality", oracle.max_edges, by_interval});

        const SpectralBound sb = spectral_bound(spec, k);
        if (oracle.max_edges > sb.floored)
          report.violations.push_back(
              {n, s, k, "spectral_bound", oracle.max_edges, sb.floored});

        if (const std::optional<std::int64_t> tb = turan_bound(spec, k);
            tb && oracle.max_edges > *tb)
          report.violations.push_back(
              {n, s, k, "turan_bound", oracle.max_edges, *tb});
      }
    }
  }
  return report;
}

}  // namespace cyclepow
