#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cyclepow/bounds.hpp"
#include "test_util.hpp"

using namespace cyclepow;

namespace {

// Independent reference: dense eigendecomposition of the actual adjacency
// matrix. Valid as a cross-check of the analytic spectrum for n >= 2s + 1.
std::vector<double> dense_spectrum_desc(const GraphSpec& spec) {
  const int n = spec.n();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (adjacent(spec, u, v)) a(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  std::vector<double> ev(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

int max_clique_exhaustive(int n, int s) {
  int best = 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    int size = 0;
    bool clique = true;
    for (int i = 0; i < n && clique; ++i) {
      if (!((mask >> i) & 1u)) continue;
      ++size;
      for (int j = i + 1; j < n; ++j)
        if (((mask >> j) & 1u) && !testutil::adj(i, j, n, s)) {
          clique = false;
          break;
        }
    }
    if (clique) best = std::max(best, size);
  }
  return best;
}

double dirichlet_reference(int n, int s, int j) {
  const double x = std::numbers::pi * j / n;
  return std::sin((2 * s + 1) * x) / std::sin(x) - 1.0;
}

}  // namespace

TEST_CASE("clique number") {
  CHECK(clique_number(GraphSpec(10, 3)) == 4);
  CHECK(clique_number(GraphSpec(7, 3)) == 7);  // complete
  CHECK(clique_number(GraphSpec(8, 3)) == 4);
  CHECK(clique_number(GraphSpec(9, 4)) == 9);  // n = 2s + 1 is complete

  for (int n = 3; n <= 12; ++n)
    for (int s = 1; s < n; ++s)
      CHECK(clique_number(GraphSpec(n, s)) == max_clique_exhaustive(n, s));
}

TEST_CASE("Turan bound values") {
  CHECK(turan_bound(GraphSpec(1000, 37), 54) == 1431);
  CHECK(turan_bound(GraphSpec(1000, 16), 359) == 60691);
  CHECK(turan_bound(GraphSpec(1000, 53), 118) == 6849);
}

TEST_CASE("Turan bound applicability") {
  CHECK_FALSE(turan_bound(GraphSpec(1000, 37), 38).has_value());  // k = s+1
  CHECK_FALSE(turan_bound(GraphSpec(5, 2), 5).has_value());       // complete
  CHECK_FALSE(turan_bound(GraphSpec(9, 4), 6).has_value());       // n = 2s+1
  CHECK(turan_bound(GraphSpec(10, 3), 5).has_value());
  CHECK_THROWS_AS(turan_bound(GraphSpec(10, 3), 11), std::invalid_argument);
}

TEST_CASE("circulant eigenvalue point values") {
  CHECK(circulant_eigenvalue(GraphSpec(10, 2), 0) == 4.0);  // exactly 2s
  CHECK(circulant_eigenvalue(GraphSpec(4, 1), 2) ==
        doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(circulant_eigenvalue(GraphSpec(6, 2), 3) ==
        doctest::Approx(0.0).scale(1).epsilon(1e-12));
  CHECK_THROWS_AS(circulant_eigenvalue(GraphSpec(6, 2), 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(circulant_eigenvalue(GraphSpec(6, 2), -1),
                  std::invalid_argument);
}

TEST_CASE("eigenvalue frequency symmetry and trace") {
  std::mt19937 rng(7201);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 200)(rng);
    const int s = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const GraphSpec spec(n, s);
    const SpectrumSummary sp = spectrum(spec);
    CHECK(sp.lambda1 == 2.0 * s);
    double trace = 0.0;
    for (int j = 0; j < n; ++j) {
      trace += sp.eigenvalues[static_cast<std::size_t>(j)];
      if (j >= 1)
        CHECK(sp.eigenvalues[static_cast<std::size_t>(j)] ==
              doctest::Approx(sp.eigenvalues[static_cast<std::size_t>(n - j)])
                  .scale(std::max(1.0, 2.0 * s))
                  .epsilon(1e-12));
    }
    CHECK(std::fabs(trace) <= 1e-9 * n * s);
  }
}

TEST_CASE("cosine sum equals the Dirichlet kernel form") {
  std::mt19937 rng(7202);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 500)(rng);
    const int s = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const int j = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const double via_sum = circulant_eigenvalue(GraphSpec(n, s), j);
    const double via_kernel = dirichlet_reference(n, s, j);
    CHECK(via_sum == doctest::Approx(via_kernel)
                         .scale(std::max(1.0, std::fabs(via_sum)))
                         .epsilon(1e-9));
  }
}

TEST_CASE("lambda2 values") {
  CHECK(lambda2(GraphSpec(4, 1)) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  // C_6^2 is the octahedron: spectrum {4, 0, 0, 0, -2, -2}
  CHECK(lambda2(GraphSpec(6, 2)) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  CHECK(lambda2(GraphSpec(5, 2)) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("analytic spectrum matches dense eigendecomposition for n >= 2s+1") {
  for (const auto& [n, s] :
       std::vector<std::pair<int, int>>{{4, 1}, {6, 2}, {8, 2}, {9, 2},
                                        {11, 5}, {12, 3}, {13, 6}, {17, 4}}) {
    REQUIRE(n >= 2 * s + 1);
    const GraphSpec spec(n, s);
    const std::vector<double> dense = dense_spectrum_desc(spec);
    std::vector<double> analytic = spectrum(spec).eigenvalues;
    std::sort(analytic.begin(), analytic.end(), std::greater<>());
    for (int i = 0; i < n; ++i)
      CHECK(analytic[static_cast<std::size_t>(i)] ==
            doctest::Approx(dense[static_cast<std::size_t>(i)])
                .scale(std::max(1.0, 2.0 * s))
                .epsilon(1e-9));
    CHECK(lambda2(spec) ==
          doctest::Approx(dense[1]).scale(std::max(1.0, 2.0 * s)).epsilon(1e-9));
  }
}

TEST_CASE("lambda2 equals a plain scan of analytic eigenvalues") {
  // exercises the internal kernel-form fast path (s >= 64) against the
  // literal cosine-sum definition
  for (const auto& [n, s] :
       std::vector<std::pair<int, int>>{{150, 63}, {150, 64}, {150, 70},
                                        {1000, 37}, {1000, 462}}) {
    const GraphSpec spec(n, s);
    double best = -2.0 * s;
    for (int j = 1; j < n; ++j)
      best = std::max(best, circulant_eigenvalue(spec, j));
    CHECK(lambda2(spec) ==
          doctest::Approx(best).scale(std::max(1.0, 2.0 * s)).epsilon(1e-9));
  }
}

TEST_CASE("spectral bound values") {
  CHECK(spectral_bound(GraphSpec(1000, 37), 54).floored == 1980);
  CHECK(spectral_bound(GraphSpec(1000, 462), 473).floored == 112499);
}

TEST_CASE("spectral bound at k = n is exactly s*n") {
  for (const auto& [n, s] :
       std::vector<std::pair<int, int>>{{10, 2}, {9, 4}, {50, 7}, {1000, 37}}) {
    const SpectralBound sb = spectral_bound(GraphSpec(n, s), n);
    CHECK(sb.raw == static_cast<double>(s) * n);  // lambda2 term vanishes
    CHECK(sb.floored == static_cast<std::int64_t>(s) * n);
  }
}

TEST_CASE("quadratic form edge count") {
  const GraphSpec c62(6, 2);
  CHECK(quadratic_form_edges(c62, VertexSubset(6)) == 0);
  CHECK(quadratic_form_edges(c62, VertexSubset(6, {1, 3, 5})) == 3);

  std::mt19937 rng(7203);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 48)(rng);
    const int s = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const GraphSpec spec(n, s);
    VertexSubset u(n);
    for (int v = 0; v < n; ++v)
      if (std::bernoulli_distribution(0.5)(rng)) u.insert(v);
    CHECK(quadratic_form_edges(spec, u) == edge_count(spec, u));
  }

  CHECK_THROWS_AS(quadratic_form_edges(GraphSpec(5000, 2), VertexSubset(5000)),
                  verification_scope_error);
}

TEST_CASE("spectral identity examples") {
  const SpectralIdentity a = spectral_identity(GraphSpec(8, 2), VertexSubset(8, {0, 1, 2}));
  CHECK(a.ok());
  CHECK(a.sum_c_sq == doctest::Approx(3.0).epsilon(1e-10));

  // full vertex set of K_5: everything sits on the all-ones eigenvector
  const SpectralIdentity b =
      spectral_identity(GraphSpec(5, 2), VertexSubset(5, {0, 1, 2, 3, 4}));
  CHECK(b.ok());
  CHECK(b.sum_lambda_c_sq == doctest::Approx(20.0).epsilon(1e-10));

  const SpectralIdentity c = spectral_identity(GraphSpec(6, 2), VertexSubset(6, {1, 3, 5}));
  CHECK(c.ok());
  CHECK(c.sum_lambda_c_sq == doctest::Approx(6.0).scale(1).epsilon(1e-10));

  CHECK_THROWS_AS(spectral_identity_check(GraphSpec(8192, 2), VertexSubset(8192)),
                  verification_scope_error);
}

TEST_CASE("spectral identity holds for random subsets in every regime") {
  std::mt19937 rng(7204);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 64)(rng);
    const int s = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const GraphSpec spec(n, s);
    VertexSubset u(n);
    for (int v = 0; v < n; ++v)
      if (std::bernoulli_distribution(0.5)(rng)) u.insert(v);
    CHECK(spectral_identity_check(spec, u));
  }
}

TEST_CASE("bound report invariants") {
  const BoundReport row = make_bound_report(GraphSpec(1000, 37), 54);
  CHECK(row.exact == 1295);
  CHECK(row.turan == 1431);
  CHECK(row.spectral_int == 1980);

  std::mt19937 rng(7205);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 40)(rng);
    const int s = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    const BoundReport rep = make_bound_report(GraphSpec(n, s), k);
    CHECK(rep.exact <= rep.spectral_int);
    if (rep.turan) CHECK(rep.exact <= *rep.turan);
  }
}
