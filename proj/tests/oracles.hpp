#pragma once

// Independent reference implementations used only by the tests. None of them
// share code with the library routines they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "econlab/ramsey.hpp"

namespace oracle {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  std::vector<double> vector(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

/// Gaussian elimination with partial pivoting.
inline std::vector<double> lu_solve(std::size_t n, std::vector<double> a, std::vector<double> b) {
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k])) piv = i;
    }
    if (a[piv * n + k] == 0.0) throw std::runtime_error("singular");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / a[k * n + k];
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i * n + j] * x[j];
    x[i] = s / a[i * n + i];
  }
  return x;
}

/// Laplace expansion along the first row.
inline double cofactor_det(std::size_t n, const std::vector<double>& a) {
  if (n == 1) return a[0];
  double det = 0.0;
  std::vector<double> minor((n - 1) * (n - 1));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) minor[(i - 1) * (n - 1) + k++] = a[i * n + j];
      }
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * a[c] * cofactor_det(n - 1, minor);
  }
  return det;
}

/// x^n + a_{n-1} x^{n-1} + ... + a_0 by Horner's scheme.
inline double horner_monic(const std::vector<double>& a, double x) {
  double p = 1.0;
  for (std::size_t i = a.size(); i-- > 0;) p = p * x + a[i];
  return p;
}

/// Cyclic Jacobi rotations; returns eigenvalues in ascending order.
inline std::vector<double> jacobi_eigenvalues(std::size_t n, std::vector<double> a) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Roots of the 2x2 characteristic polynomial via the numerically stable
/// quadratic formula (no eigenvectors, no shared code with eig2).
inline std::pair<double, double> quadratic_eigenvalues(double a11, double a12, double a21, double a22) {
  const double tr = a11 + a22;
  const double det = a11 * a22 - a12 * a21;
  const double disc = tr * tr - 4.0 * det;
  if (disc < 0.0) throw std::runtime_error("complex");
  const double q = -0.5 * (-tr + (tr >= 0.0 ? -1.0 : 1.0) * std::sqrt(disc));
  double r1 = q;
  double r2 = q != 0.0 ? det / q : 0.0;
  if (r1 < r2) std::swap(r1, r2);
  return {r1, r2};
}

/// Steady state located purely numerically: bisection on d/dt log c over
/// log k, bisection on d/dt log k over log c, then Newton on both equations
/// with a finite-difference Jacobian.
inline std::pair<double, double> ramsey_steady(const econlab::RamseyParams& p) {
  auto f = [&p](double lk, double lc) {
    const double apk = p.A_tfp * std::exp((p.alpha - 1.0) * lk);
    return std::pair<double, double>{apk - std::exp(lc - lk) - (p.delta + p.alpha_L + p.alpha_T),
                                     (p.alpha * apk - (p.delta + p.rho + p.theta * p.alpha_T)) / p.theta};
  };
  auto bisect = [](auto g, double lo, double hi) {
    double glo = g(lo);
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      const double gm = g(mid);
      if ((gm > 0.0) == (glo > 0.0)) {
        lo = mid;
        glo = gm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
  double lk = bisect([&](double x) { return f(x, 0.0).second; }, -50.0, 50.0);
  double lc = bisect([&](double y) { return f(lk, y).first; }, lk - 60.0, lk + 60.0);
  for (int it = 0; it < 20; ++it) {
    const auto [f1, f2] = f(lk, lc);
    const double h = 1e-7;
    const auto [f1k, f2k] = f(lk + h, lc);
    const auto [f1c, f2c] = f(lk, lc + h);
    const double j11 = (f1k - f1) / h, j12 = (f1c - f1) / h, j21 = (f2k - f2) / h, j22 = (f2c - f2) / h;
    const double det = j11 * j22 - j12 * j21;
    const double dk = (f1 * j22 - f2 * j12) / det;
    const double dc = (j11 * f2 - j21 * f1) / det;
    lk -= dk;
    lc -= dc;
    if (std::abs(dk) + std::abs(dc) < 1e-15) break;
  }
  return {std::exp(lk), std::exp(lc)};
}

/// Random parameter set satisfying every model invariant with c* > 0.
inline econlab::RamseyParams random_ramsey(Rng& rng) {
  for (;;) {
    econlab::RamseyParams p{rng.uniform(0.5, 2.0),   rng.uniform(0.2, 0.5),   rng.uniform(0.5, 4.0),
                            rng.uniform(0.02, 0.1),  rng.uniform(0.005, 0.03), rng.uniform(0.005, 0.03),
                            rng.uniform(0.01, 0.06)};
    const double eff = p.rho - p.alpha_L - (1.0 - p.theta) * p.alpha_T;
    if (eff <= 0.0) continue;
    const double k = std::pow(p.required_gross_return() / (p.alpha * p.A_tfp), 1.0 / (p.alpha - 1.0));
    if (p.A_tfp * std::pow(k, p.alpha) - p.break_even_rate() * k <= 0.0) continue;
    return p;
  }
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace oracle
