#include "econlab/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "econlab/crra.hpp"

namespace econlab {

const char* to_string(PathFate fate) noexcept {
  switch (fate) {
    case PathFate::bounded: return "bounded";
    case PathFate::consumption_explodes: return "consumption-explodes";
    case PathFate::consumption_collapses: return "consumption-collapses";
  }
  return "unknown";
}

void validate(const RamseyParams& p) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string(name) + " must be positive and finite");
    }
  };
  positive(p.A_tfp, "A");
  positive(p.alpha, "alpha");
  positive(p.theta, "theta");
  positive(p.delta, "delta");
  positive(p.alpha_L, "alpha_L");
  positive(p.alpha_T, "alpha_T");
  positive(p.rho, "rho");
  if (!(p.alpha < 1.0)) {
    throw DomainError("alpha must lie strictly inside (0, 1)");
  }
  if (!(p.rho - p.alpha_L - (1.0 - p.theta) * p.alpha_T > 0.0)) {
    throw DomainError("effective discount rho - alpha_L - (1 - theta) alpha_T must be positive");
  }
}

RamseyParams RamseyParams::make(double A_tfp, double alpha, double theta, double delta, double alpha_L,
                                double alpha_T, double rho) {
  RamseyParams p{A_tfp, alpha, theta, delta, alpha_L, alpha_T, rho};
  validate(p);
  return p;
}

RamseyParams RamseyParams::baseline() { return make(1.0, 0.3, 2.0, 0.05, 0.01, 0.02, 0.03); }

double SteadyState::log_k() const { return std::log(k_star); }
double SteadyState::log_c() const { return std::log(c_star); }

namespace {

void check_capital(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("capital must be positive and finite");
}

double pc_factor(const RamseyParams& p, double t) { return std::exp(p.alpha_T * t); }

}  // namespace

double production(const RamseyParams& p, double k) {
  check_capital(k);
  return p.A_tfp * std::pow(k, p.alpha);
}

double production_mp(const RamseyParams& p, double k) {
  check_capital(k);
  return p.alpha * p.A_tfp * std::pow(k, p.alpha - 1.0);
}

SteadyState steady_state(const RamseyParams& p) {
  validate(p);
  const double k = std::pow(p.required_gross_return() / (p.alpha * p.A_tfp), 1.0 / (p.alpha - 1.0));
  const double c = p.A_tfp * std::pow(k, p.alpha) - p.break_even_rate() * k;
  if (!(c > 0.0) || !std::isfinite(k)) {
    std::ostringstream msg;
    msg << "steady-state consumption is not positive (c* = " << c << ")";
    throw InfeasibleParameters(msg.str());
  }
  return {k, c};
}

Vec2 rhs(const RamseyParams& p, double log_k, double log_c) {
  const double apk = p.A_tfp * std::exp((p.alpha - 1.0) * log_k);
  const double c_over_k = std::exp(log_c - log_k);
  const Vec2 out{apk - c_over_k - p.break_even_rate(), (p.alpha * apk - p.required_gross_return()) / p.theta};
  if (!std::isfinite(out.x1) || !std::isfinite(out.x2)) {
    std::ostringstream msg;
    msg << "Ramsey vector field overflowed at log k = " << log_k << ", log c = " << log_c;
    throw Error(ErrorKind::diverged, msg.str());
  }
  return out;
}

Mat2 jacobian_closed(const RamseyParams& p) {
  validate(p);
  const double g = p.required_gross_return();
  Mat2 j;
  j.a11 = p.rho - p.alpha_L - (1.0 - p.theta) * p.alpha_T;
  j.a12 = p.break_even_rate() - g / p.alpha;
  j.a21 = (p.alpha - 1.0) / p.theta * g;
  j.a22 = 0.0;
  return j;
}

double jacobian_discriminant(const RamseyParams& p) {
  const Mat2 j = jacobian_closed(p);
  return j.a11 * j.a11 + 4.0 * j.a12 * j.a21;
}

bool is_diagonalizable(const RamseyParams& p) {
  return std::abs(jacobian_discriminant(p)) > eig2_discriminant_tolerance(jacobian_closed(p));
}

EigenDecomp2 eigen_closed(const RamseyParams& p) {
  const Mat2 j = jacobian_closed(p);
  const double disc = jacobian_discriminant(p);
  const double tol = eig2_discriminant_tolerance(j);
  const double half = 0.5 * j.a11;
  if (disc < -tol) {
    const double im = 0.5 * std::sqrt(-disc);
    std::ostringstream msg;
    msg << "linearized Ramsey system has complex eigenvalues " << half << " +/- " << im << "i";
    throw ComplexSpectrumError(msg.str(), {half, im}, {half, -im});
  }
  if (std::abs(disc) <= tol) {
    throw NotDiagonalizableError("a11^2 == -4 a12 a21: repeated eigenvalue with a one-dimensional eigenspace", half);
  }
  const double s = 0.5 * std::sqrt(disc);  // sqrt(a11^2/4 + a12 a21)
  const double l1 = half + s;
  const double l2 = half - s;
  auto vector_for = [&j](double lambda, Vec2 v) {
    // (-a12, a11/2 -/+ s) degenerates when a12 == 0; use the second row then.
    if (norm(v) <= 1e-14 * std::max(1.0, std::abs(lambda))) v = {lambda, j.a21};
    return normalize_eigenvector(v);
  };
  return make_eigen_decomp(l1, vector_for(l1, {-j.a12, half - s}), l2, vector_for(l2, {-j.a12, half + s}));
}

LinearizedSystem linearize(const RamseyParams& p) {
  return {jacobian_closed(p), steady_state(p), eigen_closed(p)};
}

Vec2 linearized_solution(const RamseyParams& p, double z0, double w0, double t) {
  const EigenDecomp2 d = eigen_closed(p);
  const Vec2 coef = d.P_inv * Vec2{z0, w0};
  return (coef.x1 * std::exp(d.lambda1 * t)) * d.v1 + (coef.x2 * std::exp(d.lambda2 * t)) * d.v2;
}

namespace {

EigenDecomp2 saddle_eigen(const RamseyParams& p) {
  const EigenDecomp2 d = eigen_closed(p);
  if (!(d.lambda1 > 0.0 && d.lambda2 < 0.0)) {
    std::ostringstream msg;
    msg << "steady state is not a saddle: eigenvalues " << d.lambda1 << " and " << d.lambda2;
    throw StabilityError(msg.str(), d.lambda1, d.lambda2);
  }
  return d;
}

}  // namespace

double saddle_path_linear(const RamseyParams& p, double k0) {
  check_capital(k0);
  const EigenDecomp2 d = saddle_eigen(p);
  const SteadyState ss = steady_state(p);
  if (d.v2.x1 == 0.0) {
    throw StabilityError("stable eigenvector has no capital component", d.lambda1, d.lambda2);
  }
  const double slope = d.v2.x2 / d.v2.x1;
  return std::exp(ss.log_c() + slope * (std::log(k0) - ss.log_k()));
}

namespace {

PathFate exit_side(double dz, double dw) {
  if (dz < -kExitLogDeviation || dw > kExitLogDeviation) return PathFate::consumption_explodes;
  if (dw < -kExitLogDeviation || dz > kExitLogDeviation) return PathFate::consumption_collapses;
  return PathFate::bounded;
}

}  // namespace

Simulation simulate_classified(const RamseyParams& p, double k0, double c0, const Grid& grid) {
  check_capital(k0);
  if (!(c0 > 0.0) || !std::isfinite(c0)) throw DomainError("initial consumption must be positive and finite");
  const SteadyState ss = steady_state(p);
  const double lk = ss.log_k();
  const double lc = ss.log_c();

  const VectorField field = [&p](double, std::span<const double> x, std::span<double> dx) {
    const Vec2 v = rhs(p, x[0], x[1]);
    dx[0] = v.x1;
    dx[1] = v.x2;
  };

  const double x0[] = {std::log(k0), std::log(c0)};
  std::vector<double> accepted(x0, x0 + 2);
  PathFate fate = PathFate::bounded;

  Rk4Options opts;
  opts.labels = {"log_k", "log_c"};
  opts.stop = [&](double, std::span<const double> x) {
    accepted.insert(accepted.end(), x.begin(), x.end());
    fate = exit_side(x[0] - lk, x[1] - lc);
    return fate != PathFate::bounded;
  };

  try {
    Trajectory path = rk4_integrate(field, x0, grid, opts);
    return {std::move(path), fate};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::diverged) throw;
  }
  // Overflow inside a step: keep the accepted prefix and classify by where it was heading.
  const std::size_t nodes = accepted.size() / 2;
  const double dz = accepted[accepted.size() - 2] - lk;
  const double dw = accepted.back() - lc;
  fate = exit_side(dz, dw);
  if (fate == PathFate::bounded) {
    fate = dz < 0.0 || dw > 0.0 ? PathFate::consumption_explodes : PathFate::consumption_collapses;
  }
  if (nodes < 2) {
    throw RamseyDivergence("Ramsey path overflowed in its first step", fate, grid.t0());
  }
  return {Trajectory(grid.prefix(nodes - 1), 2, std::move(accepted), opts.labels), fate};
}

Trajectory simulate(const RamseyParams& p, double k0, double c0, const Grid& grid) {
  Simulation s = simulate_classified(p, k0, c0, grid);
  if (s.fate != PathFate::bounded) {
    std::ostringstream msg;
    msg << "Ramsey path left the steady-state neighbourhood (" << to_string(s.fate) << ") at t = "
        << s.path.grid().t1();
    throw RamseyDivergence(msg.str(), s.fate, s.path.grid().t1());
  }
  return std::move(s.path);
}

ShootingResult shoot_nonlinear(const RamseyParams& p, double k0, const ShootingOptions& options) {
  check_capital(k0);
  const SteadyState ss = steady_state(p);
  saddle_eigen(p);
  if (k0 < 0.05 * ss.k_star || k0 > 5.0 * ss.k_star) {
    throw DomainError("shooting needs k0 within [0.05 k*, 5 k*]");
  }
  if (!(options.dt > 0.0) || !(options.t_max > options.dt)) {
    throw ArgumentError("shooting needs 0 < dt < t_max");
  }
  const auto steps = static_cast<std::size_t>(std::ceil(options.t_max / options.dt));
  const Grid grid(0.0, options.t_max, steps);

  const ScalarFunction side = [&](double c0) {
    const Simulation s = simulate_classified(p, k0, c0, grid);
    switch (s.fate) {
      case PathFate::consumption_explodes: return 1.0;
      case PathFate::consumption_collapses: return -1.0;
      case PathFate::bounded: break;
    }
    std::ostringstream msg;
    msg << "trial c0 = " << c0 << " neither converged away nor exited before t_max = " << options.t_max;
    throw HorizonError(msg.str());
  };

  const double lo = 1e-6;
  const double hi = production(p, k0);
  Bracket b{};
  try {
    b = bisect_bracket(side, lo, hi, options.tol, options.max_iter);
  } catch (const BracketError&) {
    std::ostringstream msg;
    msg << "no saddle-path bracket in c0 in [" << lo << ", " << hi << "]";
    throw BracketError(msg.str());
  }

  ShootingResult out{b.midpoint(), b.lo, b.hi, b.iterations, simulate_classified(p, k0, b.midpoint(), grid), 0.0, 0};
  const double lk = ss.log_k();
  const double lc = ss.log_c();
  double best = std::hypot(out.path.path.value(0, 0) - lk, out.path.path.value(0, 1) - lc);
  for (std::size_t i = 1; i < out.path.path.size(); ++i) {
    const double dist = std::hypot(out.path.path.value(i, 0) - lk, out.path.path.value(i, 1) - lc);
    if (dist < best) {
      best = dist;
      out.closest_node = i;
    }
  }
  out.closest_approach = best;
  return out;
}

double firm_foc_r(const RamseyParams& p, double k) { return production_mp(p, k) - p.delta; }

double wage(const RamseyParams& p, double k, double t) {
  return pc_factor(p, t) * (production(p, k) - production_mp(p, k) * k);
}

double hamiltonian(const RamseyParams& p, double t, double a, double c, double nu, double r, double w) {
  const CrraSpec u = CrraSpec::normalized(p.theta);
  return utility(u, c) * std::exp(-(p.rho - p.alpha_L) * t) + nu * (w + (r - p.alpha_L) * a - c);
}

double foc_c_residual(const RamseyParams& p, double t, double c, double nu) {
  const CrraSpec u = CrraSpec::normalized(p.theta);
  return std::exp(-(p.rho - p.alpha_L) * t) * marginal(u, c) - nu;
}

double costate_rate(const RamseyParams& p, double nu, double r) { return -nu * (r - p.alpha_L); }

std::vector<double> assets_path(double a0, const TimeFunction& r_fn, const TimeFunction& w_fn,
                                const TimeFunction& c_fn, double alpha_L, const Grid& grid) {
  const auto excess = [&](double s) { return r_fn(s) - alpha_L; };
  std::vector<double> a(grid.nodes());
  a[0] = a0;
  double D = 0.0;      // int_0^t (r - alpha_L)
  double inner = 0.0;  // int_0^t (w - c) e^{-D}
  for (std::size_t i = 0; i + 1 < grid.nodes(); ++i) {
    const double t0 = grid.time(i);
    const double t1 = grid.time(i + 1);
    const double tm = 0.5 * (t0 + t1);
    const double D_mid = D + simpson(excess, t0, tm, 2);
    const double D_end = D + simpson(excess, t0, t1, 2);
    const double g0 = (w_fn(t0) - c_fn(t0)) * std::exp(-D);
    const double gm = (w_fn(tm) - c_fn(tm)) * std::exp(-D_mid);
    const double g1 = (w_fn(t1) - c_fn(t1)) * std::exp(-D_end);
    inner += (t1 - t0) / 6.0 * (g0 + 4.0 * gm + g1);
    D = D_end;
    a[i + 1] = std::exp(D) * (a0 + inner);
    if (!std::isfinite(a[i + 1])) {
      std::ostringstream msg;
      msg << "asset path overflowed at t = " << t1;
      throw Error(ErrorKind::diverged, msg.str());
    }
  }
  return a;
}

VectorField assets_field(const TimeFunction& r_fn, const TimeFunction& w_fn, const TimeFunction& c_fn,
                         double alpha_L) {
  return [r_fn, w_fn, c_fn, alpha_L](double t, std::span<const double> x, std::span<double> dx) {
    dx[0] = (r_fn(t) - alpha_L) * x[0] + w_fn(t) - c_fn(t);
  };
}

namespace {

std::vector<double> discount_exponent(const std::vector<double>& r, double alpha_L, double spacing) {
  std::vector<double> excess(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) excess[i] = r[i] - alpha_L;
  return cumulative_simpson(excess, spacing);
}

void check_path(const HouseholdPath& path) {
  const std::size_t n = path.grid.nodes();
  if (path.a.size() != n || path.c.size() != n || path.nu.size() != n || path.r.size() != n || path.w.size() != n) {
    throw ArgumentError("household path series must have one value per grid node");
  }
}

}  // namespace

HouseholdPath make_household_path(const Grid& grid, std::vector<double> a, const TimeFunction& r_fn,
                                  const TimeFunction& w_fn, const TimeFunction& c_fn, double alpha_L, double nu0) {
  const std::size_t n = grid.nodes();
  if (a.size() != n) throw ArgumentError("asset series must have one value per grid node");
  HouseholdPath path{grid, std::move(a), std::vector<double>(n), std::vector<double>(n), std::vector<double>(n),
                     std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.time(i);
    path.r[i] = r_fn(t);
    path.w[i] = w_fn(t);
    path.c[i] = c_fn(t);
  }
  const std::vector<double> D = discount_exponent(path.r, alpha_L, grid.spacing());
  for (std::size_t i = 0; i < n; ++i) path.nu[i] = nu0 * std::exp(-D[i]);
  return path;
}

HouseholdPath household_path(const RamseyParams& p, const Trajectory& traj) {
  if (traj.dim() != 2) throw ArgumentError("Ramsey trajectory must hold (log k, log c)");
  const Grid& grid = traj.grid();
  const std::size_t n = grid.nodes();
  HouseholdPath path{grid, std::vector<double>(n), std::vector<double>(n), std::vector<double>(n),
                     std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.time(i);
    const double k = std::exp(traj.value(i, 0));
    const double c = std::exp(traj.value(i, 1));
    path.a[i] = k * pc_factor(p, t);
    path.c[i] = c * pc_factor(p, t);
    path.r[i] = firm_foc_r(p, k);
    path.w[i] = wage(p, k, t);
  }
  const double nu0 = marginal(CrraSpec::normalized(p.theta), path.c[0]);
  const std::vector<double> D = discount_exponent(path.r, p.alpha_L, grid.spacing());
  for (std::size_t i = 0; i < n; ++i) path.nu[i] = nu0 * std::exp(-D[i]);
  return path;
}

double budget_identity_residual(const HouseholdPath& path, double alpha_L) {
  check_path(path);
  const double h = path.grid.spacing();
  const std::vector<double> D = discount_exponent(path.r, alpha_L, h);
  const std::size_t n = D.size();
  std::vector<double> pv_c(n), pv_w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double disc = std::exp(-D[i]);
    pv_c[i] = path.c[i] * disc;
    pv_w[i] = path.w[i] * disc;
  }
  const double terminal = path.a.back() * std::exp(-D.back());
  return terminal + simpson_samples(pv_c, h) - path.a.front() - simpson_samples(pv_w, h);
}

std::vector<double> euler_residual(const RamseyParams& p, const Trajectory& traj) {
  if (traj.dim() != 2) throw ArgumentError("Ramsey trajectory must hold (log k, log c)");
  const std::size_t n = traj.size();
  if (n < 3) throw ArgumentError("Euler residual needs at least three nodes");
  const double h = traj.grid().spacing();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double growth = 0.0;
    if (i == 0) {
      growth = (-3.0 * traj.value(0, 1) + 4.0 * traj.value(1, 1) - traj.value(2, 1)) / (2.0 * h);
    } else if (i + 1 == n) {
      growth = (3.0 * traj.value(i, 1) - 4.0 * traj.value(i - 1, 1) + traj.value(i - 2, 1)) / (2.0 * h);
    } else {
      growth = (traj.value(i + 1, 1) - traj.value(i - 1, 1)) / (2.0 * h);
    }
    const double k = std::exp(traj.value(i, 0));
    out[i] = growth - (production_mp(p, k) - p.delta - p.rho - p.theta * p.alpha_T) / p.theta;
  }
  return out;
}

TransversalityReport transversality_check(const HouseholdPath& path, double alpha_L) {
  check_path(path);
  const std::vector<double> D = discount_exponent(path.r, alpha_L, path.grid.spacing());
  const std::size_t n = D.size();
  std::vector<double> m(n);
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = path.a[i] * std::exp(-D[i]);
    all_zero = all_zero && m[i] == 0.0;
  }
  TransversalityReport rep{};
  rep.final_value = m.back();
  rep.midpoint_value = m[(n - 1) / 2];
  rep.horizon = path.grid.t1() - path.grid.t0();
  rep.degenerate_zero = all_zero;
  rep.decaying = all_zero || std::abs(rep.final_value) * 10.0 <= std::abs(rep.midpoint_value);
  return rep;
}

}  // namespace econlab
