#include "econlab/series.hpp"

#include <cmath>
#include <numbers>

namespace econlab {

namespace {

void check(TaylorSpec spec) {
  if (spec.terms == 0) throw ArgumentError("Taylor series needs at least one term");
}

}  // namespace

double reduce_angle(double x) {
  if (!std::isfinite(x)) throw ArgumentError("angle must be finite");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(x, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

double sin_taylor(double x, TaylorSpec spec) {
  check(spec);
  x = reduce_angle(x);
  const double x2 = x * x;
  double term = x;
  double sum = term;
  for (std::size_t n = 1; n < spec.terms; ++n) {
    const double k = static_cast<double>(2 * n);
    term *= -x2 / (k * (k + 1.0));
    sum += term;
  }
  return sum;
}

double cos_taylor(double x, TaylorSpec spec) {
  check(spec);
  x = reduce_angle(x);
  const double x2 = x * x;
  double term = 1.0;
  double sum = term;
  for (std::size_t n = 1; n < spec.terms; ++n) {
    const double k = static_cast<double>(2 * n);
    term *= -x2 / ((k - 1.0) * k);
    sum += term;
  }
  return sum;
}

MatrixComplex exp_i_taylor(double x, TaylorSpec spec) {
  check(spec);
  x = reduce_angle(x);
  // term_{n+1} = term_n * (i x) / (n + 1), multiplied in the matrix representation.
  MatrixComplex term{1.0, 0.0};
  MatrixComplex sum = term;
  const std::size_t powers = 2 * spec.terms;
  for (std::size_t n = 1; n < powers; ++n) {
    term = mc_mul(term, {0.0, x / static_cast<double>(n)});
    sum.re += term.re;
    sum.im += term.im;
  }
  return sum;
}

double sin_diff_identity_residual(double alpha, double beta) {
  const TaylorSpec spec{24};
  const double lhs = sin_taylor(reduce_angle(beta - alpha), spec);
  const double rhs = cos_taylor(alpha, spec) * sin_taylor(beta, spec) - cos_taylor(beta, spec) * sin_taylor(alpha, spec);
  return std::abs(lhs - rhs);
}

}  // namespace econlab
