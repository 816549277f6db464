#include "cyclepow/cycle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cyclepow {

namespace {

constexpr int kWordBits = 64;

int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }

}  // namespace

int canonical_vertex(std::int64_t v, int n) {
  if (n < 1) throw std::invalid_argument("cycle length must be positive");
  std::int64_t r = v % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

int d_plus(std::int64_t i, std::int64_t j, int n) {
  const int a = canonical_vertex(i, n);
  const int b = canonical_vertex(j, n);
  return a > b ? a - b : b - a;
}

int d_minus(std::int64_t i, std::int64_t j, int n) {
  return n - d_plus(i, j, n);
}

int d_cyclic(std::int64_t i, std::int64_t j, int n) {
  const int dp = d_plus(i, j, n);
  const int dm = n - dp;
  return dp < dm ? dp : dm;
}

GraphSpec::GraphSpec(int n, int s) : n_(n), s_(s) {
  if (n < 3) throw std::invalid_argument("GraphSpec: n must be at least 3");
  if (s < 1) throw std::invalid_argument("GraphSpec: s must be at least 1");
}

VertexSubset::VertexSubset(int n) : n_(n), words_(word_count(n), 0) {
  if (n < 1) throw std::invalid_argument("VertexSubset: ambient size must be positive");
}

VertexSubset::VertexSubset(int n, std::initializer_list<std::int64_t> members)
    : VertexSubset(n) {
  for (std::int64_t v : members) insert(v);
}

VertexSubset::VertexSubset(int n, std::span<const int> members) : VertexSubset(n) {
  for (int v : members) insert(v);
}

int VertexSubset::size() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool VertexSubset::contains(std::int64_t v) const {
  const int c = canonical_vertex(v, n_);
  return (words_[c / kWordBits] >> (c % kWordBits)) & 1u;
}

void VertexSubset::insert(std::int64_t v) {
  const int c = canonical_vertex(v, n_);
  words_[c / kWordBits] |= std::uint64_t{1} << (c % kWordBits);
}

void VertexSubset::erase(std::int64_t v) {
  const int c = canonical_vertex(v, n_);
  words_[c / kWordBits] &= ~(std::uint64_t{1} << (c % kWordBits));
}

std::vector<int> VertexSubset::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<int>(wi) * kWordBits + bit);
      w &= w - 1;
    }
  }
  return out;
}

VertexSubset VertexSubset::rotated(std::int64_t shift) const {
  VertexSubset out(n_);
  for (int v : members()) out.insert(static_cast<std::int64_t>(v) + shift);
  return out;
}

VertexSubset VertexSubset::reflected() const {
  VertexSubset out(n_);
  for (int v : members()) out.insert(-static_cast<std::int64_t>(v));
  return out;
}

bool VertexSubset::lex_less(const VertexSubset& other) const {
  const std::vector<int> a = members();
  const std::vector<int> b = other.members();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool adjacent(const GraphSpec& spec, std::int64_t u, std::int64_t v) {
  const int d = d_cyclic(u, v, spec.n());
  return d >= 1 && d <= spec.s();
}

namespace {

VertexSubset neighbors_directed(const GraphSpec& spec, const VertexSubset& U,
                                std::int64_t u, bool clockwise) {
  if (U.ambient_size() != spec.n())
    throw std::invalid_argument("subset ambient size does not match the graph");
  const int uc = canonical_vertex(u, spec.n());
  if (!U.contains(uc))
    throw std::invalid_argument("neighborhood base vertex is not in the subset");
  VertexSubset out(spec.n());
  for (int v : U.members()) {
    if (v == uc) continue;
    const int d = clockwise ? d_plus(uc, v, spec.n()) : d_minus(uc, v, spec.n());
    if (d <= spec.s()) out.insert(v);
  }
  return out;
}

}  // namespace

VertexSubset neighbors_plus(const GraphSpec& spec, const VertexSubset& U,
                            std::int64_t u) {
  return neighbors_directed(spec, U, u, true);
}

VertexSubset neighbors_minus(const GraphSpec& spec, const VertexSubset& U,
                             std::int64_t u) {
  return neighbors_directed(spec, U, u, false);
}

std::int64_t edge_count(const GraphSpec& spec, const VertexSubset& U) {
  if (U.ambient_size() != spec.n())
    throw std::invalid_argument("subset ambient size does not match the graph");
  const std::vector<int> ms = U.members();
  std::int64_t edges = 0;
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a + 1; b < ms.size(); ++b)
      if (adjacent(spec, ms[a], ms[b])) ++edges;
  return edges;
}

VertexSubset interval(const GraphSpec& spec, std::int64_t start, int k) {
  if (k < 1 || k > spec.n())
    throw std::invalid_argument("interval size must be in [1, n]");
  const int s0 = canonical_vertex(start, spec.n());
  VertexSubset out(spec.n());
  for (int i = 0; i < k; ++i) out.insert(static_cast<std::int64_t>(s0) + i);
  return out;
}

}  // namespace cyclepow
