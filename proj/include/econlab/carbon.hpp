#pragma once

// One-box atmospheric carbon budget dx/dt = f(t) - c x with exponential
// emissions f(t) = f0 e^{dt} and c = 1/tau_oc + 1/tau_ld. Units: GtC, years,
// t0 = 0.

#include <vector>

#include "econlab/numerics.hpp"

namespace econlab {

struct CarbonParams {
  double tau_oc;  // ocean uptake timescale (yr)
  double tau_ld;  // land uptake timescale (yr)
  double f0;      // emissions at t = 0 (GtC/yr)
  double d;       // emission growth rate (1/yr)
  double x0;      // initial atmospheric stock (GtC)

  /// Validated construction; throws DomainError.
  static CarbonParams make(double tau_oc, double tau_ld, double f0, double d, double x0);

  /// Illustration defaults (not calibrated): tau 30/30, f0 10, d 0.02, x0 600.
  static CarbonParams defaults();

  double c() const noexcept { return 1.0 / tau_oc + 1.0 / tau_ld; }
};

double emissions(const CarbonParams& p, double t);
double concentration_closed(const CarbonParams& p, double t);
double airborne_fraction(const CarbonParams& p, double t);
double airborne_fraction_limit(const CarbonParams& p);

/// RK4 solution of dx/dt = f(t) - c x from x0 on the grid.
Trajectory concentration_rk4(const CarbonParams& p, const Grid& grid);

struct CarbonRow {
  double t;
  double emissions;
  double x_closed;
  double x_rk4;
  double af;
  double af_limit;
};

/// One row per grid node whose index is a multiple of `every` (the last node
/// always included).
std::vector<CarbonRow> carbon_table(const CarbonParams& p, const Grid& grid, std::size_t every = 1);

}  // namespace econlab
