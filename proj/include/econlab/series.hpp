#pragma once

#include <cstddef>

#include "econlab/mat2geo.hpp"

namespace econlab {

/// Maclaurin partial sums. `terms` counts the nonzero terms of each real
/// series, so exp_i_taylor sums powers 0 .. 2*terms-1 and its real and
/// imaginary parts carry the same number of terms as cos_taylor and sin_taylor.
struct TaylorSpec {
  std::size_t terms = 24;
};

/// Reduce to (-pi, pi].
double reduce_angle(double x);

double sin_taylor(double x, TaylorSpec spec);
double cos_taylor(double x, TaylorSpec spec);
MatrixComplex exp_i_taylor(double x, TaylorSpec spec);

/// |sin(b - a) - (cos a sin b - cos b sin a)| with 24-term series.
double sin_diff_identity_residual(double alpha, double beta);

}  // namespace econlab
