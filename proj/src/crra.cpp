#include "econlab/crra.hpp"

#include <cmath>
#include <string>

#include "econlab/errors.hpp"

namespace econlab {

CrraSpec CrraSpec::make(double theta, double k0, double k1) {
  if (!(theta > 0.0) || !std::isfinite(theta)) throw DomainError("theta must be positive");
  if (!(k0 > 0.0) || !std::isfinite(k0)) throw DomainError("k0 must be positive");
  if (!std::isfinite(k1)) throw DomainError("k1 must be finite");
  return {theta, k0, k1};
}

CrraSpec CrraSpec::normalized(double theta) {
  if (std::abs(theta - 1.0) <= kLogBranchTolerance) return make(theta, 1.0, 0.0);
  return make(theta, 1.0, -1.0 / (1.0 - theta));
}

namespace {

void check_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("CRRA utility is defined for x > 0");
}

}  // namespace

double utility(const CrraSpec& s, double x) {
  check_x(x);
  if (std::abs(s.theta - 1.0) <= kLogBranchTolerance) {
    return s.k0 * std::log(x) + s.k1;
  }
  // k0 x^e / e + k1 == k0 (x^e - 1) / e + (k1 + k0 / e); the second form keeps
  // the normalized family accurate as theta -> 1.
  const double e = 1.0 - s.theta;
  return s.k0 * std::expm1(e * std::log(x)) / e + (s.k1 + s.k0 / e);
}

double marginal(const CrraSpec& s, double x) {
  check_x(x);
  return s.k0 * std::pow(x, -s.theta);
}

double arrow_pratt(const CrraSpec& s, double x, double h) {
  check_x(x);
  if (!(h > 0.0) || !(x - 2.0 * h > 0.0)) {
    throw ArgumentError("Arrow-Pratt step must satisfy 0 < 2h < x");
  }
  const double um2 = utility(s, x - 2.0 * h);
  const double um1 = utility(s, x - h);
  const double u0 = utility(s, x);
  const double up1 = utility(s, x + h);
  const double up2 = utility(s, x + 2.0 * h);
  const double d1 = (um2 - 8.0 * um1 + 8.0 * up1 - up2) / (12.0 * h);
  const double d2 = (-um2 + 16.0 * um1 - 30.0 * u0 + 16.0 * up1 - up2) / (12.0 * h * h);
  if (d1 == 0.0) throw ArgumentError("Arrow-Pratt step too small: first difference vanished");
  return -d2 * x / d1;
}

}  // namespace econlab
