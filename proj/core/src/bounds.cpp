#include "cyclepow/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cyclepow {

namespace {

constexpr int kDenseVerificationLimit = 4096;

// Relative guard added before flooring the spectral bound. The raw value is
// often an exact integer (k = n gives s * n; complete regimes hit integers
// too) and must not be floored one below it by rounding error. The guard can
// only ever report a weakly larger integer, which is still an upper bound.
constexpr double kFloorGuard = 1e-9;

// Cosine-sum eigenvalue with the angle reduced through (j t) mod n so large
// frequencies lose no precision.
double cosine_sum(int n, int s, int j) {
  const double step = 2.0 * std::numbers::pi / n;
  double sum = 0.0;
  for (int t = 1; t <= s; ++t) {
    const std::int64_t m = (static_cast<std::int64_t>(j) * t) % n;
    sum += 2.0 * std::cos(step * static_cast<double>(m));
  }
  return sum;
}

// Same value through the Dirichlet kernel, sin((2s+1) pi j / n) /
// sin(pi j / n) - 1, valid for j in [1, n). O(1) per frequency.
double dirichlet_form(int n, int s, int j) {
  const std::int64_t two_n = 2 * static_cast<std::int64_t>(n);
  const std::int64_t m = (static_cast<std::int64_t>(2 * s + 1) * j) % two_n;
  const double num = std::sin(std::numbers::pi * static_cast<double>(m) / n);
  const double den = std::sin(std::numbers::pi * static_cast<double>(j) / n);
  return num / den - 1.0;
}

std::int64_t floor_guarded(double raw) {
  const double guard = kFloorGuard * std::max(1.0, std::fabs(raw));
  return static_cast<std::int64_t>(std::floor(raw + guard));
}

void require_dense_scope(const GraphSpec& spec) {
  if (spec.n() > kDenseVerificationLimit)
    throw verification_scope_error(
        "dense verification restricted to n <= " +
        std::to_string(kDenseVerificationLimit));
}

// Adjacency eigenvalue at frequency j from the true symbol (cyclic distance
// in [1, s]). Coincides with circulant_eigenvalue for n >= 2s + 1; in the
// degenerate regime n <= 2s the plain cosine sum would count wrapped offsets
// twice and no longer describe the graph.
double adjacency_eigenvalue(const GraphSpec& spec, int j) {
  const int n = spec.n();
  const double step = 2.0 * std::numbers::pi / n;
  const int half = n / 2;
  double sum = 0.0;
  for (int t = 1; t <= half && t <= spec.s(); ++t) {
    const double weight = (2 * t == n) ? 1.0 : 2.0;
    const std::int64_t m = (static_cast<std::int64_t>(j) * t) % n;
    sum += weight * std::cos(step * static_cast<double>(m));
  }
  return sum;
}

}  // namespace

int clique_number(const GraphSpec& spec) {
  return spec.is_complete() ? spec.n() : spec.s() + 1;
}

std::optional<std::int64_t> turan_bound(const GraphSpec& spec, int k) {
  if (k < 1 || k > spec.n())
    throw std::invalid_argument("k must be in [1, n]");
  if (k < spec.s() + 2 || !spec.strict_regime()) return std::nullopt;
  const std::int64_t s1 = spec.s() + 1;
  const std::int64_t m = k / s1;
  return static_cast<std::int64_t>(k) * (k - 1) / 2 - s1 * (m * (m - 1) / 2);
}

double circulant_eigenvalue(const GraphSpec& spec, int j) {
  if (j < 0 || j >= spec.n())
    throw std::invalid_argument("frequency index must be in [0, n)");
  if (j == 0) return 2.0 * spec.s();
  return cosine_sum(spec.n(), spec.s(), j);
}

double lambda2(const GraphSpec& spec) {
  const int n = spec.n();
  const int s = spec.s();
  // The two evaluation routes agree to high precision; the kernel form keeps
  // the scan O(n) for large s.
  const bool use_kernel = s >= 64;
  double best = -2.0 * s;
  for (int j = 1; j < n; ++j) {
    const double v = use_kernel ? dirichlet_form(n, s, j) : cosine_sum(n, s, j);
    if (v > best) best = v;
  }
  return best;
}

SpectrumSummary spectrum(const GraphSpec& spec) {
  SpectrumSummary out;
  out.eigenvalues.resize(static_cast<std::size_t>(spec.n()));
  out.eigenvalues[0] = 2.0 * spec.s();
  out.lambda1 = out.eigenvalues[0];
  double best = -2.0 * spec.s();
  for (int j = 1; j < spec.n(); ++j) {
    const double v = cosine_sum(spec.n(), spec.s(), j);
    out.eigenvalues[static_cast<std::size_t>(j)] = v;
    if (v > best) best = v;
  }
  out.lambda2 = best;
  return out;
}

SpectralBound spectral_bound(const GraphSpec& spec, int k) {
  if (k < 1 || k > spec.n())
    throw std::invalid_argument("k must be in [1, n]");
  SpectralBound out;
  out.lambda2 = lambda2(spec);
  const double kk = static_cast<double>(k);
  const double n = static_cast<double>(spec.n());
  out.raw = spec.s() * kk * kk / n + out.lambda2 * (kk / 2.0 - kk * kk / (2.0 * n));
  out.floored = floor_guarded(out.raw);
  return out;
}

std::int64_t quadratic_form_edges(const GraphSpec& spec, const VertexSubset& U) {
  require_dense_scope(spec);
  if (U.ambient_size() != spec.n())
    throw std::invalid_argument("subset ambient size does not match the graph");
  const std::vector<int> ms = U.members();
  // (A chi_U)_u is the number of members adjacent to u; the inner product
  // with chi_U sums it over members, giving twice the edge count.
  std::int64_t degree_sum = 0;
  for (int u : ms)
    for (int v : ms)
      if (adjacent(spec, u, v)) ++degree_sum;
  return degree_sum / 2;
}

SpectralIdentity spectral_identity(const GraphSpec& spec, const VertexSubset& U) {
  require_dense_scope(spec);
  if (U.ambient_size() != spec.n())
    throw std::invalid_argument("subset ambient size does not match the graph");

  const int n = spec.n();
  const std::vector<int> ms = U.members();
  const double step = 2.0 * std::numbers::pi / n;

  SpectralIdentity id;
  id.tolerance = 1e-8 * n;

  // Frequency 0: the normalized all-ones eigenvector.
  const double c0_sq =
      static_cast<double>(ms.size()) * static_cast<double>(ms.size()) / n;
  id.sum_c_sq = c0_sq;
  id.sum_lambda_c_sq = adjacency_eigenvalue(spec, 0) * c0_sq;

  // Paired cosine/sine eigenvectors for 0 < j < n/2, both with eigenvalue
  // lambda_j; their squared coefficients combine to (2/n)(a^2 + b^2).
  for (int j = 1; 2 * j < n; ++j) {
    double a = 0.0, b = 0.0;
    for (int t : ms) {
      const std::int64_t m = (static_cast<std::int64_t>(j) * t) % n;
      const double ang = step * static_cast<double>(m);
      a += std::cos(ang);
      b += std::sin(ang);
    }
    const double pair_sq = 2.0 / n * (a * a + b * b);
    id.sum_c_sq += pair_sq;
    id.sum_lambda_c_sq += adjacency_eigenvalue(spec, j) * pair_sq;
  }

  // For even n, the alternating eigenvector at frequency n/2.
  if (n % 2 == 0) {
    double alt = 0.0;
    for (int t : ms) alt += (t % 2 == 0) ? 1.0 : -1.0;
    const double c_sq = alt * alt / n;
    id.sum_c_sq += c_sq;
    id.sum_lambda_c_sq += adjacency_eigenvalue(spec, n / 2) * c_sq;
  }

  const double expected_two_e = 2.0 * static_cast<double>(edge_count(spec, U));
  id.parseval_ok =
      std::fabs(id.sum_c_sq - static_cast<double>(ms.size())) <= id.tolerance;
  id.edges_ok = std::fabs(id.sum_lambda_c_sq - expected_two_e) <= id.tolerance;
  return id;
}

bool spectral_identity_check(const GraphSpec& spec, const VertexSubset& U) {
  return spectral_identity(spec, U).ok();
}

BoundReport make_bound_report(const GraphSpec& spec, int k) {
  BoundReport rep;
  rep.n = spec.n();
  rep.k = k;
  rep.s = spec.s();
  rep.exact = exact_max(spec, k).value;
  rep.turan = turan_bound(spec, k);
  const SpectralBound sb = spectral_bound(spec, k);
  rep.spectral_raw = sb.raw;
  rep.spectral_int = sb.floored;
  rep.lambda2 = sb.lambda2;
  return rep;
}

}  // namespace cyclepow
