#ifndef CYCLEPOW_BOUNDS_HPP
#define CYCLEPOW_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclepow/cycle.hpp"
#include "cyclepow/extremal.hpp"

namespace cyclepow {

/// Analytic spectrum of the circulant adjacency operator of C_n^s.
struct SpectrumSummary {
  std::vector<double> eigenvalues;  // indexed by frequency j in [0, n)
  double lambda1 = 0.0;             // eigenvalues[0], exactly 2s
  double lambda2 = 0.0;             // max over frequencies j >= 1
};

struct SpectralBound {
  double raw = 0.0;           // s k^2 / n + lambda2 (k/2 - k^2 / 2n)
  std::int64_t floored = 0;   // the bound as an integer
  double lambda2 = 0.0;
};

/// One comparison row: exact value against both upper bounds.
struct BoundReport {
  int n = 0, k = 0, s = 0;
  std::int64_t exact = 0;
  std::optional<std::int64_t> turan;  // empty when k <= s+1 or n <= 2s+1
  double spectral_raw = 0.0;
  std::int64_t spectral_int = 0;
  double lambda2 = 0.0;
};

/// Clique number of C_n^s: n when the graph is complete (n <= 2s + 1),
/// s + 1 otherwise. Any s + 1 consecutive vertices form a clique; for
/// n >= 2s + 2 no clique can be larger, since among the neighbors of a
/// vertex u the pairs (u - (s+1-i), u + i) are at cyclic distance s + 1.
int clique_number(const GraphSpec& spec);

/// Turan's bound C(k,2) - (s+1) m (m-1) / 2 with m = floor(k / (s+1)),
/// in exact integer arithmetic. Defined only when k >= s + 2 (so that k
/// exceeds the clique number) and n >= 2s + 2; empty otherwise.
std::optional<std::int64_t> turan_bound(const GraphSpec& spec, int k);

/// Eigenvalue of the circulant symbol at frequency j in [0, n):
/// sum_{t=1..s} 2 cos(2 pi j t / n). Returns exactly 2s at j = 0. For
/// n >= 2s + 1 this is the adjacency spectrum of C_n^s.
double circulant_eigenvalue(const GraphSpec& spec, int j);

/// max over j in [1, n) of circulant_eigenvalue(spec, j); the second-largest
/// eigenvalue in the non-complete regime (the j = 0 value 2s is the strict
/// maximum there).
double lambda2(const GraphSpec& spec);

SpectrumSummary spectrum(const GraphSpec& spec);

/// Upper bound e(U) <= s k^2 / n + lambda2 (k/2 - k^2 / 2n) for |U| = k,
/// reported raw and floored. Requires 1 <= k <= n.
SpectralBound spectral_bound(const GraphSpec& spec, int k);

/// <A chi_U, chi_U> / 2 evaluated by applying the adjacency operator to the
/// characteristic vector directly; equals edge_count(spec, U) exactly.
/// Verification tool, restricted to n <= 4096.
std::int64_t quadratic_form_edges(const GraphSpec& spec, const VertexSubset& U);

/// Expansion of chi_U in the real trigonometric eigenbasis of the adjacency
/// operator (cosine/sine pairs per frequency). sum_c_sq must equal |U| and
/// sum_lambda_c_sq must equal 2 e(U).
struct SpectralIdentity {
  double sum_c_sq = 0.0;
  double sum_lambda_c_sq = 0.0;
  double tolerance = 0.0;  // 1e-8 * n
  bool parseval_ok = false;
  bool edges_ok = false;
  bool ok() const { return parseval_ok && edges_ok; }
};

SpectralIdentity spectral_identity(const GraphSpec& spec, const VertexSubset& U);

/// True iff both identities hold within 1e-8 * n. Restricted to n <= 4096.
bool spectral_identity_check(const GraphSpec& spec, const VertexSubset& U);

/// Exact maximum plus both bounds for one (n, k, s).
BoundReport make_bound_report(const GraphSpec& spec, int k);

}  // namespace cyclepow

#endif  // CYCLEPOW_BOUNDS_HPP
