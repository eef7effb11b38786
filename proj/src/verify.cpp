#include "econlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace econlab {

double linearization_gap(const RamseyParams& p, double z0, double w0, const Grid& grid) {
  const SteadyState ss = steady_state(p);
  const Trajectory path = simulate(p, ss.k_star * std::exp(z0), ss.c_star * std::exp(w0), grid);
  double gap = 0.0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vec2 lin = linearized_solution(p, z0, w0, grid.time(i));
    gap = std::max(gap, std::hypot(path.value(i, 0) - ss.log_k() - lin.x1, path.value(i, 1) - ss.log_c() - lin.x2));
  }
  return gap;
}

HouseholdPath ponzi_path(const RamseyParams& p, const Grid& grid, double a0) {
  const SteadyState ss = steady_state(p);
  const double r = firm_foc_r(p, ss.k_star);
  const TimeFunction r_fn = [r](double) { return r; };
  const TimeFunction w_fn = [&p, &ss](double t) { return wage(p, ss.k_star, t); };
  std::vector<double> a = assets_path(a0, r_fn, w_fn, w_fn, p.alpha_L, grid);
  return make_household_path(grid, std::move(a), r_fn, w_fn, w_fn, p.alpha_L);
}

namespace {

std::string num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

VerifyCheck at_most(std::string name, double value, double threshold, std::string detail = {}) {
  const bool ok = std::isfinite(value) && value <= threshold;
  return {std::move(name), value, threshold, ok, std::move(detail)};
}

// Every check runs even if an earlier one threw; the failure is recorded.
template <typename F>
VerifyCheck guarded(const std::string& name, double threshold, F&& check) {
  try {
    return check();
  } catch (const Error& e) {
    return {name, std::nan(""), threshold, false, std::string(to_string(e.kind())) + ": " + e.what()};
  }
}

}  // namespace

std::vector<VerifyCheck> verify_ramsey(const RamseyParams& p) {
  std::vector<VerifyCheck> out;
  const SteadyState ss = steady_state(p);
  const Mat2 jac = jacobian_closed(p);

  out.push_back(guarded("01 steady-state rhs", 1e-10, [&] {
    const Vec2 v = rhs(p, ss.log_k(), ss.log_c());
    return at_most("01 steady-state rhs", std::max(std::abs(v.x1), std::abs(v.x2)), 1e-10,
                   "k* = " + num(ss.k_star) + ", c* = " + num(ss.c_star));
  }));

  out.push_back(guarded("02 jacobian vs finite differences", 1e-6, [&] {
    const VectorFunction f = [&p](std::span<const double> x) {
      const Vec2 v = rhs(p, x[0], x[1]);
      return std::vector<double>{v.x1, v.x2};
    };
    const double x[] = {ss.log_k(), ss.log_c()};
    const std::vector<double> fd = central_diff_jacobian(f, x);
    const double closed[] = {jac.a11, jac.a12, jac.a21, jac.a22};
    double err = 0.0;
    for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::abs(fd[i] - closed[i]));
    return at_most("02 jacobian vs finite differences", err, 1e-6);
  }));

  out.push_back(guarded("03 a22 exactly zero", 0.0, [&] {
    return at_most("03 a22 exactly zero", std::abs(jac.a22), 0.0);
  }));

  out.push_back(guarded("04 eigen residuals", 1e-9, [&] {
    const EigenDecomp2 d = eigen_closed(p);
    const EigenDecomp2 g = eig2(jac);
    double err = 0.0;
    err = std::max(err, norm(jac * d.v1 - d.lambda1 * d.v1));
    err = std::max(err, norm(jac * d.v2 - d.lambda2 * d.v2));
    err = std::max({err, std::abs(d.lambda1 - g.lambda1), std::abs(d.lambda2 - g.lambda2), norm(d.v1 - g.v1),
                    norm(d.v2 - g.v2)});
    return at_most("04 eigen residuals", err, 1e-9, "lambda = " + num(d.lambda1) + ", " + num(d.lambda2));
  }));

  out.push_back(guarded("05 diagonalizability predicate", 0.0, [&] {
    bool generic_ok = true;
    try {
      eig2(jac);
    } catch (const NotDiagonalizableError&) {
      generic_ok = false;
    } catch (const ComplexSpectrumError&) {
    }
    const bool agree = generic_ok == is_diagonalizable(p);
    return VerifyCheck{"05 diagonalizability predicate", agree ? 0.0 : 1.0, 0.0, agree,
                       is_diagonalizable(p) ? "diagonalizable" : "defective"};
  }));

  out.push_back(guarded("06 saddle structure", 0.0, [&] {
    const EigenDecomp2 d = eigen_closed(p);
    const bool saddle = d.lambda1 > 0.0 && d.lambda2 < 0.0;
    return VerifyCheck{"06 saddle structure", saddle ? 0.0 : 1.0, 0.0, saddle,
                       "lambda1 > 0 > lambda2"};
  }));

  out.push_back(guarded("07 interest rate at k*", 1e-12, [&] {
    const double r = firm_foc_r(p, ss.k_star);
    return at_most("07 interest rate at k*", std::abs(r - (p.rho + p.theta * p.alpha_T)), 1e-12,
                   "r* = " + num(r));
  }));

  out.push_back(guarded("08 wage share", 1e-12, [&] {
    const double y = production(p, ss.k_star);
    return at_most("08 wage share", std::abs(wage(p, ss.k_star, 0.0) - (1.0 - p.alpha) * y) / y, 1e-12);
  }));

  ShootingOptions opts;
  opts.tol = 1e-12;
  const double k0 = 0.5 * ss.k_star;
  std::optional<ShootingResult> shot;
  std::string shot_error;
  try {
    shot = shoot_nonlinear(p, k0, opts);
  } catch (const Error& e) {
    shot_error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  auto need_shot = [&] {
    if (!shot) throw Error(ErrorKind::convergence, "shooting failed: " + shot_error);
    return shot->path.path.truncated(std::max<std::size_t>(shot->closest_node, 2));
  };

  out.push_back(guarded("09 shooting vs linear c0", 0.02, [&] {
    need_shot();
    const double lin = saddle_path_linear(p, k0);
    return at_most("09 shooting vs linear c0", std::abs(lin - shot->c0) / shot->c0, 0.02,
                   "k0 = 0.5 k*, shooting c0 = " + num(shot->c0) + ", linear c0 = " + num(lin));
  }));

  out.push_back(guarded("10 euler residual", 1e-4, [&] {
    const std::vector<double> e = euler_residual(p, need_shot());
    double m = 0.0;
    for (double v : e) m = std::max(m, std::abs(v));
    return at_most("10 euler residual", m, 1e-4, "up to closest approach");
  }));

  out.push_back(guarded("11 consumption FOC", 1e-8, [&] {
    const HouseholdPath hp = household_path(p, need_shot());
    double m = 0.0;
    for (std::size_t i = 0; i < hp.c.size(); ++i) {
      m = std::max(m, std::abs(foc_c_residual(p, hp.grid.time(i), hp.c[i], hp.nu[i]) / hp.nu[i]));
    }
    return at_most("11 consumption FOC", m, 1e-8, "relative to the costate");
  }));

  out.push_back(guarded("12 transversality decays", 0.0, [&] {
    const TransversalityReport rep = transversality_check(household_path(p, need_shot()), p.alpha_L);
    return VerifyCheck{"12 transversality decays", rep.final_value, 0.0, rep.decaying,
                       "horizon " + num(rep.horizon) + ", midpoint value " + num(rep.midpoint_value)};
  }));

  out.push_back(guarded("13 ponzi path does not decay", 0.0, [&] {
    const TransversalityReport rep = transversality_check(ponzi_path(p, Grid(0.0, 200.0, 2000), -1.0), p.alpha_L);
    return VerifyCheck{"13 ponzi path does not decay", rep.final_value, 0.0, !rep.decaying,
                       "debt rolled over, horizon " + num(rep.horizon)};
  }));

  out.push_back(guarded("14 budget identity", 1e-6, [&] {
    const double r_star = firm_foc_r(p, ss.k_star);
    const TimeFunction r_fn = [r_star](double t) { return r_star + 0.01 * std::sin(0.1 * t); };
    const TimeFunction w_fn = [&](double t) { return wage(p, ss.k_star, t) * (1.0 + 0.1 * std::cos(0.05 * t)); };
    const TimeFunction c_fn = [&](double t) { return 0.9 * wage(p, ss.k_star, t); };
    const Grid grid(0.0, 100.0, 2000);
    const double a0 = ss.k_star;
    const HouseholdPath hp =
        make_household_path(grid, assets_path(a0, r_fn, w_fn, c_fn, p.alpha_L, grid), r_fn, w_fn, c_fn, p.alpha_L);
    std::vector<double> disc(grid.nodes()), pv_w(grid.nodes());
    const std::vector<double> D = [&] {
      std::vector<double> ex(grid.nodes());
      for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = hp.r[i] - p.alpha_L;
      return cumulative_simpson(ex, grid.spacing());
    }();
    for (std::size_t i = 0; i < pv_w.size(); ++i) pv_w[i] = hp.w[i] * std::exp(-D[i]);
    const double scale = std::abs(a0) + simpson_samples(pv_w, grid.spacing());
    return at_most("14 budget identity", std::abs(budget_identity_residual(hp, p.alpha_L)) / scale, 1e-6,
                   "relative to a0 + PV(w)");
  }));

  out.push_back(guarded("15 linearization order", 0.5, [&] {
    const Grid grid(0.0, 10.0, 1000);
    const double big = linearization_gap(p, 0.02, -0.01, grid);
    const double small = linearization_gap(p, 0.01, -0.005, grid);
    const double factor = big / small;
    return VerifyCheck{"15 linearization order", factor, 0.5, factor >= 3.5 && factor <= 4.5,
                       "gap ratio for halved deviation, expected in [3.5, 4.5]"};
  }));

  return out;
}

}  // namespace econlab
