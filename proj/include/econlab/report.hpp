#pragma once

// Text artifacts: CSV tables, the phase-diagram SVG and the verification
// table. Output depends only on the inputs, so repeated runs are byte-identical.

#include <string>
#include <string_view>
#include <vector>

#include "econlab/carbon.hpp"
#include "econlab/ramsey.hpp"
#include "econlab/verify.hpp"

namespace econlab {

/// printf "%.12g" (the C locale decimal point is used regardless of locale).
std::string format_number(double v);

/// Header: t,f,x_closed,x_rk4,AF,AF_limit
std::string carbon_csv(const std::vector<CarbonRow>& rows);

/// Header: t,log_k,log_c,k,c,r,w with k, c, w per unit of effective labor.
std::string ramsey_csv(const RamseyParams& p, const Trajectory& traj);

/// Phase plane in (log k, log c): axes, both zero-growth loci (located by
/// bisection on the vector field), one polyline per trajectory and a single
/// circle at the steady state.
std::string render_phase_svg(const RamseyParams& p, const std::vector<Trajectory>& trajectories,
                             const SteadyState& steady);

/// One line per check plus a summary line.
std::string verify_table(const std::vector<VerifyCheck>& checks);

/// Throws IoError.
void write_text_file(const std::string& path, std::string_view content);

}  // namespace econlab
