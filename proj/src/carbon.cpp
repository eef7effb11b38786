#include "econlab/carbon.hpp"

#include <cmath>

namespace econlab {

CarbonParams CarbonParams::make(double tau_oc, double tau_ld, double f0, double d, double x0) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be positive and finite");
  };
  positive(tau_oc, "tau_oc");
  positive(tau_ld, "tau_ld");
  positive(f0, "f0");
  positive(d, "d");
  if (!(x0 >= 0.0) || !std::isfinite(x0)) throw DomainError("x0 must be non-negative and finite");
  return {tau_oc, tau_ld, f0, d, x0};
}

CarbonParams CarbonParams::defaults() { return make(30.0, 30.0, 10.0, 0.02, 600.0); }

namespace {

void check_time(double t) {
  if (!(t >= 0.0)) throw DomainError("carbon model is defined for t >= 0");
}

}  // namespace

double emissions(const CarbonParams& p, double t) {
  check_time(t);
  return p.f0 * std::exp(p.d * t);
}

double concentration_closed(const CarbonParams& p, double t) {
  check_time(t);
  const double c = p.c();
  const double decay = std::exp(-c * t);
  return p.x0 * decay + p.f0 * decay * std::expm1((c + p.d) * t) / (c + p.d);
}

double airborne_fraction(const CarbonParams& p, double t) {
  check_time(t);
  const double c = p.c();
  const double cd = c + p.d;
  return 1.0 - c * (p.x0 / p.f0 - 1.0 / cd) * std::exp(-cd * t) - c / cd;
}

double airborne_fraction_limit(const CarbonParams& p) { return p.d / (p.c() + p.d); }

Trajectory concentration_rk4(const CarbonParams& p, const Grid& grid) {
  const double c = p.c();
  const VectorField field = [&p, c](double t, std::span<const double> x, std::span<double> dx) {
    dx[0] = p.f0 * std::exp(p.d * t) - c * x[0];
  };
  const double x0[] = {p.x0};
  Rk4Options opts;
  opts.labels = {"x"};
  return rk4_integrate(field, x0, grid, opts);
}

std::vector<CarbonRow> carbon_table(const CarbonParams& p, const Grid& grid, std::size_t every) {
  if (every == 0) throw ArgumentError("row stride must be positive");
  if (grid.t0() < 0.0) throw DomainError("carbon grid must start at t >= 0");
  if (grid.t0() != 0.0) throw DomainError("carbon model starts at t0 = 0");
  const Trajectory rk = concentration_rk4(p, grid);
  const double limit = airborne_fraction_limit(p);
  std::vector<CarbonRow> rows;
  for (std::size_t i = 0; i < grid.nodes(); ++i) {
    if (i % every != 0 && i + 1 != grid.nodes()) continue;
    const double t = grid.time(i);
    rows.push_back({t, emissions(p, t), concentration_closed(p, t), rk.value(i, 0), airborne_fraction(p, t), limit});
  }
  return rows;
}

}  // namespace econlab
