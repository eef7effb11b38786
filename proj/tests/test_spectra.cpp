#include <doctest.h>

#include <cmath>

#include "econlab/spectra.hpp"
#include "oracles.hpp"

using namespace econlab;

namespace {

SymMatN random_sym(oracle::Rng& rng, std::size_t n) {
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = rng.uniform(-3.0, 3.0);
  }
  return SymMatN(n, a);
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("symmetry is enforced") {
  CHECK_THROWS_AS(SymMatN(2, {1.0, 2.0, 3.0, 4.0}), ArgumentError);
}

TEST_CASE("quadratic form and its gradient") {
  const SymMatN a(2, {3.0, 1.0, 1.0, 4.0});
  const std::vector<double> x = {1.0, -2.0};
  CHECK(quadform_eval(a, x) == doctest::Approx(3.0 - 4.0 + 16.0));
  const std::vector<double> g = quadform_grad(a, x);
  CHECK(g[0] == doctest::Approx(2.0));
  CHECK(g[1] == doctest::Approx(-14.0));
}

TEST_CASE("sphere extrema match Jacobi eigenvalues") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.index(2, 5);
    const SymMatN a = random_sym(rng, n);
    const std::vector<double> ev = oracle::jacobi_eigenvalues(n, a.matrix().data());
    // Skip near-degenerate extremes, where power iteration is arbitrarily slow.
    if (ev[1] - ev[0] < 0.05 || ev[n - 1] - ev[n - 2] < 0.05) continue;
    const SphereExtrema s = sphere_extrema(a);
    CHECK(s.lambda_min == doctest::Approx(ev.front()).epsilon(1e-8));
    CHECK(s.lambda_max == doctest::Approx(ev.back()).epsilon(1e-8));
    CHECK(lagrange_residual(a, s.x_min, s.lambda_min) < 1e-8);
    CHECK(lagrange_residual(a, s.x_max, s.lambda_max) < 1e-8);
  }
}

TEST_CASE("a start orthogonal to the top eigenvector still finds it") {
  const SymMatN a(2, {1.0, 0.0, 0.0, 5.0});
  const SphereExtrema s = sphere_extrema(a, 1e-18, 200000, std::vector<double>{1.0, 0.0});
  CHECK(s.lambda_max == doctest::Approx(5.0));
  CHECK(s.lambda_min == doctest::Approx(1.0));
}

TEST_CASE("lagrange residual requires a unit vector") {
  const SymMatN a(2, {3.0, 1.0, 1.0, 4.0});
  CHECK_THROWS_AS(lagrange_residual(a, std::vector<double>{1.0, 1.0}, 3.0), ArgumentError);
}

}
