#pragma once

// Oracle checks for one Ramsey parameter set, in a fixed order.

#include <string>
#include <vector>

#include "econlab/ramsey.hpp"

namespace econlab {

struct VerifyCheck {
  std::string name;
  double value;
  double threshold;
  bool passed;
  std::string detail;
};

/// Max over t in the grid of |nonlinear - linearized| log-deviation, both
/// started at (z0, w0) from the steady state.
double linearization_gap(const RamseyParams& p, double z0, double w0, const Grid& grid);

/// Debt rolled over at the market rate: a0 < 0, c = w, so a(t) e^{-D(t)} = a0.
HouseholdPath ponzi_path(const RamseyParams& p, const Grid& grid, double a0);

std::vector<VerifyCheck> verify_ramsey(const RamseyParams& p);

}  // namespace econlab
