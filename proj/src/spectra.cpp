#include "econlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace econlab {

namespace {

void check_symmetric(const MatN& m) {
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = i + 1; j < m.n(); ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-12) {
        std::ostringstream msg;
        msg << "matrix is not symmetric at (" << i << "," << j << ")";
        throw ArgumentError(msg.str());
      }
    }
  }
}

void check_dim(const SymMatN& a, std::span<const double> x) {
  if (x.size() != a.n()) throw ArgumentError("vector length does not match the matrix dimension");
}

double vnorm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

struct PowerResult {
  std::vector<double> x;
  double lambda;
  double residual;
  std::size_t iterations;
};

double residual_of(const SymMatN& a, std::span<const double> x, double lambda) {
  const std::vector<double> ax = a.apply(x);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = ax[i] - lambda * x[i];
    s += r * r;
  }
  return std::sqrt(s);
}

// Power iteration on sign * A + shift * I, which is positive definite. Iterates
// stay on the unit sphere; lambda is the Rayleigh quotient of A itself.
PowerResult power_iterate(const SymMatN& a, double sign, double shift, std::vector<double> x, double tol,
                          std::size_t max_iter) {
  const std::size_t n = a.n();
  const double nx = vnorm(x);
  for (double& v : x) v /= nx;
  double prev = quadform_eval(a, x);
  double residual = residual_of(a, x, prev);
  const double stationarity = std::sqrt(tol);
  std::vector<double> y(n);
  for (std::size_t it = 1; it <= max_iter; ++it) {
    const std::vector<double> ax = a.apply(x);
    for (std::size_t i = 0; i < n; ++i) y[i] = sign * ax[i] + shift * x[i];
    const double ny = vnorm(y);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
    const double lambda = quadform_eval(a, x);
    residual = residual_of(a, x, lambda);
    // Successive quotients cannot agree more closely than a few ulps of lambda.
    const double step_tol = std::max(tol, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(lambda));
    if (std::abs(lambda - prev) < step_tol && residual < stationarity) {
      return {x, lambda, residual, it};
    }
    prev = lambda;
  }
  std::ostringstream msg;
  msg << "power iteration did not converge in " << max_iter << " iterations (residual " << residual << ")";
  throw ConvergenceError(msg.str(), residual);
}

// Fixed direction used to restart from a converged vector, so a start that is
// orthogonal to the extremal eigenvector still reaches it.
std::vector<double> escape_direction(std::size_t n) {
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = std::cos(1.0 + 2.0 * static_cast<double>(i));
  const double np = vnorm(p);
  for (double& v : p) v /= np;
  return p;
}

PowerResult extremal(const SymMatN& a, double sign, double shift, const std::vector<double>& start, double tol,
                     std::size_t max_iter) {
  PowerResult first = power_iterate(a, sign, shift, start, tol, max_iter);
  const std::vector<double> p = escape_direction(a.n());
  std::vector<double> kicked = first.x;
  for (std::size_t i = 0; i < kicked.size(); ++i) kicked[i] += 1e-2 * p[i];
  PowerResult second = power_iterate(a, sign, shift, kicked, tol, max_iter);
  second.iterations += first.iterations;
  const double margin = std::sqrt(tol);
  if (sign * second.lambda > sign * first.lambda + margin) return second;
  first.iterations = second.iterations;
  return first;
}

}  // namespace

SymMatN::SymMatN(std::size_t n, std::vector<double> row_major) : m_(n, std::move(row_major)) {
  check_symmetric(m_);
}

SymMatN::SymMatN(const MatN& m) : m_(m) { check_symmetric(m_); }

std::vector<double> SymMatN::apply(std::span<const double> x) const {
  const std::size_t n = m_.n();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += m_(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double quadform_eval(const SymMatN& a, std::span<const double> x) {
  check_dim(a, x);
  double s = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) s += a(i, j) * x[i] * x[j];
  }
  return s;
}

std::vector<double> quadform_grad(const SymMatN& a, std::span<const double> x) {
  check_dim(a, x);
  std::vector<double> g = a.apply(x);
  for (double& v : g) v *= 2.0;
  return g;
}

SphereExtrema sphere_extrema(const SymMatN& a, double tol, std::size_t max_iter,
                             std::optional<std::vector<double>> start) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  const std::size_t n = a.n();
  std::vector<double> x0;
  if (start) {
    if (start->size() != n) throw ArgumentError("start vector has the wrong dimension");
    if (!(vnorm(*start) > 0.0)) throw ArgumentError("start vector must be nonzero");
    x0 = *start;
  } else {
    x0.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
  }

  double row_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::abs(a(i, j));
    row_sum = std::max(row_sum, s);
  }
  const double shift = 1.0 + row_sum;

  const PowerResult hi = extremal(a, 1.0, shift, x0, tol, max_iter);
  const PowerResult lo = extremal(a, -1.0, shift, x0, tol, max_iter);
  return {lo.lambda, lo.x, hi.lambda, hi.x, lo.iterations + hi.iterations};
}

double lagrange_residual(const SymMatN& a, std::span<const double> x, double lambda) {
  check_dim(a, x);
  if (std::abs(vnorm(x) - 1.0) > 1e-8) {
    throw ArgumentError("Lagrange residual needs a unit vector");
  }
  return 2.0 * residual_of(a, x, lambda);
}

}  // namespace econlab
