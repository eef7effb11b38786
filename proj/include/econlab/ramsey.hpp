#pragma once

// Ramsey growth model in units of effective labor. The state is
// (log k, log c) and the equilibrium dynamics are
//
//   d/dt log k = A k^{alpha-1} - c/k - (delta + alpha_L + alpha_T)
//   d/dt log c = (alpha A k^{alpha-1} - (delta + rho + theta alpha_T)) / theta
//
// Household quantities (per-capita assets, consumption, costate) use the
// per-capita scaling x_pc(t) = x(t) e^{alpha_T t}.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "econlab/mat2geo.hpp"
#include "econlab/numerics.hpp"

namespace econlab {

struct RamseyParams {
  double A_tfp;
  double alpha;
  double theta;
  double delta;
  double alpha_L;
  double alpha_T;
  double rho;

  /// Validated construction; throws DomainError naming the offending field.
  static RamseyParams make(double A_tfp, double alpha, double theta, double delta, double alpha_L, double alpha_T,
                           double rho);

  /// Named illustration parameters (not calibrated): A=1, alpha=0.3, theta=2,
  /// delta=0.05, alpha_L=0.01, alpha_T=0.02, rho=0.03.
  static RamseyParams baseline();

  /// delta + alpha_L + alpha_T
  double break_even_rate() const noexcept { return delta + alpha_L + alpha_T; }
  /// delta + rho + theta alpha_T
  double required_gross_return() const noexcept { return delta + rho + theta * alpha_T; }
};

/// Throws DomainError if any invariant of RamseyParams is violated.
void validate(const RamseyParams& p);

struct SteadyState {
  double k_star;
  double c_star;

  double log_k() const;
  double log_c() const;
};

struct LinearizedSystem {
  Mat2 jac;
  SteadyState steady;
  EigenDecomp2 eigen;
};

/// Where a simulated path leaves the neighbourhood of the steady state.
enum class PathFate {
  bounded,                // stayed within the exit box until the end of the grid
  consumption_explodes,   // consumption too high: capital crashes ("c-side")
  consumption_collapses,  // consumption too low: consumption decays away ("k-side")
};

const char* to_string(PathFate fate) noexcept;

/// |log k - log k*| or |log c - log c*| above this ends a classified simulation.
inline constexpr double kExitLogDeviation = 5.0;

class RamseyDivergence : public Error {
 public:
  RamseyDivergence(const std::string& what, PathFate fate, double time)
      : Error(ErrorKind::diverged, what), fate_(fate), time_(time) {}

  PathFate fate() const noexcept { return fate_; }
  double time() const noexcept { return time_; }

 private:
  PathFate fate_;
  double time_;
};

class InfeasibleParameters : public Error {
 public:
  explicit InfeasibleParameters(const std::string& what) : Error(ErrorKind::infeasible, what) {}
};

class StabilityError : public Error {
 public:
  StabilityError(const std::string& what, double lambda1, double lambda2)
      : Error(ErrorKind::stability, what), lambda1_(lambda1), lambda2_(lambda2) {}

  double lambda1() const noexcept { return lambda1_; }
  double lambda2() const noexcept { return lambda2_; }

 private:
  double lambda1_;
  double lambda2_;
};

class HorizonError : public Error {
 public:
  explicit HorizonError(const std::string& what) : Error(ErrorKind::horizon, what) {}
};

/// y = A k^alpha
double production(const RamseyParams& p, double k);
/// f'(k) = alpha A k^{alpha-1}
double production_mp(const RamseyParams& p, double k);

/// Closed form; throws InfeasibleParameters when c* <= 0.
SteadyState steady_state(const RamseyParams& p);

/// (d/dt log k, d/dt log c). Throws Error(diverged) on exponential overflow.
Vec2 rhs(const RamseyParams& p, double log_k, double log_c);

/// Jacobian of rhs at the steady state; a22 is exactly 0.
Mat2 jacobian_closed(const RamseyParams& p);

/// a11^2 + 4 a12 a21, the discriminant of the Jacobian's characteristic polynomial.
double jacobian_discriminant(const RamseyParams& p);

/// |a11^2 + 4 a12 a21| > 1e-12.
bool is_diagonalizable(const RamseyParams& p);

/// lambda = a11/2 +/- sqrt(a11^2/4 + a12 a21), v = (-a12, a11/2 -/+ sqrt(...)),
/// vectors normalized like eig2. Throws ComplexSpectrumError or
/// NotDiagonalizableError.
EigenDecomp2 eigen_closed(const RamseyParams& p);

/// Jacobian, steady state and eigen-system together.
LinearizedSystem linearize(const RamseyParams& p);

/// Solution of the linear system started at log-deviations (z0, w0).
Vec2 linearized_solution(const RamseyParams& p, double z0, double w0, double t);

/// Initial consumption on the stable eigenvector through (log k*, log c*).
double saddle_path_linear(const RamseyParams& p, double k0);

struct Simulation {
  Trajectory path;  // columns: log_k, log_c
  PathFate fate;
};

/// RK4 on (log k, log c). Ends early once the path leaves the exit box (or
/// overflows) and reports the side it left on.
Simulation simulate_classified(const RamseyParams& p, double k0, double c0, const Grid& grid);

/// Same integration; a path that leaves the exit box throws RamseyDivergence.
Trajectory simulate(const RamseyParams& p, double k0, double c0, const Grid& grid);

struct ShootingOptions {
  double tol = 1e-10;     // final bracket width on c0
  double t_max = 2000.0;  // integration horizon for classifying a trial
  double dt = 0.05;       // RK4 step
  std::size_t max_iter = 200;
};

struct ShootingResult {
  double c0;           // midpoint of the final bracket
  double bracket_lo;   // classified consumption_collapses
  double bracket_hi;   // classified consumption_explodes
  std::size_t iterations;
  Simulation path;     // path started from c0
  double closest_approach;  // min over path of |(log k, log c) - steady state|
  std::size_t closest_node;
};

/// Bisection on c0 over [1e-6, production(p, k0)] with forward RK4
/// classification of every trial. Requires k0 in [0.05 k*, 5 k*].
ShootingResult shoot_nonlinear(const RamseyParams& p, double k0, const ShootingOptions& options = {});

/// r = f'(k) - delta
double firm_foc_r(const RamseyParams& p, double k);
/// w(t) = e^{alpha_T t} (f(k) - f'(k) k)
double wage(const RamseyParams& p, double k, double t);

/// H = u(c) e^{-(rho - alpha_L) t} + nu [w + (r - alpha_L) a - c] with the
/// normalized CRRA utility of parameter theta.
double hamiltonian(const RamseyParams& p, double t, double a, double c, double nu, double r, double w);

/// dH/dc = e^{-(rho - alpha_L) t} u'(c) - nu
double foc_c_residual(const RamseyParams& p, double t, double c, double nu);

/// Costate law of motion nu' = -dH/da = -nu (r - alpha_L).
double costate_rate(const RamseyParams& p, double nu, double r);

using TimeFunction = std::function<double(double)>;

/// Per-capita asset path by variation of constants:
///   a(t) = e^{D(t)} (a0 + int_0^t (w - c) e^{-D(s)} ds),  D(t) = int_0^t (r - alpha_L)
/// with every integral evaluated by Simpson's rule on each grid interval.
std::vector<double> assets_path(double a0, const TimeFunction& r_fn, const TimeFunction& w_fn,
                                const TimeFunction& c_fn, double alpha_L, const Grid& grid);

/// a' = (r - alpha_L) a + w - c, for integrating the same budget with RK4.
VectorField assets_field(const TimeFunction& r_fn, const TimeFunction& w_fn, const TimeFunction& c_fn,
                         double alpha_L);

struct HouseholdPath {
  Grid grid;
  std::vector<double> a;
  std::vector<double> c;
  std::vector<double> nu;
  std::vector<double> r;
  std::vector<double> w;
};

/// Samples r, w, c on the grid next to the given assets; the costate solves
/// nu' = -nu (r - alpha_L) from nu0.
HouseholdPath make_household_path(const Grid& grid, std::vector<double> a, const TimeFunction& r_fn,
                                  const TimeFunction& w_fn, const TimeFunction& c_fn, double alpha_L,
                                  double nu0 = 1.0);

/// Equilibrium household path of a Ramsey trajectory: assets equal capital
/// per capita, r and w from the firm's conditions, nu0 = u'(c_pc(0)).
HouseholdPath household_path(const RamseyParams& p, const Trajectory& traj);

/// a(T) e^{-D(T)} + PV(c) - a(0) - PV(w), integrals by Simpson on the grid.
double budget_identity_residual(const HouseholdPath& path, double alpha_L);

/// Per node: d/dt log c (central differences) - (f'(k) - delta - rho - theta alpha_T) / theta.
std::vector<double> euler_residual(const RamseyParams& p, const Trajectory& traj);

struct TransversalityReport {
  bool decaying;
  bool degenerate_zero;
  double final_value;  // a(T) e^{-D(T)}
  double midpoint_value;
  double horizon;      // T - t0 of the diagnostic
};

/// m(t) = a(t) e^{-int_0^t (r - alpha_L)}; decaying iff |m| fell by at least
/// a factor 10 over the second half of the horizon (or m is identically 0).
TransversalityReport transversality_check(const HouseholdPath& path, double alpha_L);

}  // namespace econlab
