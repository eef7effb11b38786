#pragma once

// Quadratic symmetric forms q(x) = x^T A x, their gradient, and their extrema
// on the unit sphere. The constrained optima are eigenvectors and the
// Lagrange multipliers are the extreme eigenvalues.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "econlab/mat2geo.hpp"

namespace econlab {

/// Square matrix that is symmetric within 1e-12 per entry.
class SymMatN {
 public:
  SymMatN(std::size_t n, std::vector<double> row_major);
  explicit SymMatN(const MatN& m);

  std::size_t n() const noexcept { return m_.n(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const MatN& matrix() const noexcept { return m_; }

  std::vector<double> apply(std::span<const double> x) const;

 private:
  MatN m_;
};

struct SphereExtrema {
  double lambda_min;
  std::vector<double> x_min;
  double lambda_max;
  std::vector<double> x_max;
  std::size_t iterations;
};

double quadform_eval(const SymMatN& a, std::span<const double> x);

/// 2 A x.
std::vector<double> quadform_grad(const SymMatN& a, std::span<const double> x);

/// Shifted power iteration. `start` overrides the default start vector
/// (all components 1/sqrt(n)); it is normalized before use.
SphereExtrema sphere_extrema(const SymMatN& a, double tol = 1e-18, std::size_t max_iter = 200000,
                             std::optional<std::vector<double>> start = std::nullopt);

/// |2 A x - lambda 2 x| for a unit vector x.
double lagrange_residual(const SymMatN& a, std::span<const double> x, double lambda);

}  // namespace econlab
