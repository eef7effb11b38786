#pragma once

// Constant-relative-risk-aversion utility:
//   U(x) = k0 x^{1-theta} / (1-theta) + k1   (theta != 1)
//   U(x) = k0 log x + k1                     (theta == 1)

namespace econlab {

struct CrraSpec {
  double theta;
  double k0 = 1.0;
  double k1 = 0.0;

  /// Validated construction; throws DomainError.
  static CrraSpec make(double theta, double k0 = 1.0, double k1 = 0.0);

  /// u(x) = (x^{1-theta} - 1) / (1 - theta), so that u(1) = 0.
  static CrraSpec normalized(double theta);
};

/// |theta - 1| at or below this selects the logarithmic branch.
inline constexpr double kLogBranchTolerance = 1e-12;

double utility(const CrraSpec& s, double x);
double marginal(const CrraSpec& s, double x);

/// -U''(x) x / U'(x) from finite differences of `utility` only, using
/// five-point central stencils with step h. Requires x > 2h > 0.
double arrow_pratt(const CrraSpec& s, double x, double h);

}  // namespace econlab
