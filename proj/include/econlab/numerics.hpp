#pragma once

// Shared numeric oracles: fixed-step RK4, composite Simpson, central finite
// differences and scalar bisection. Everything here is a pure function of its
// arguments.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "econlab/errors.hpp"

namespace econlab {

/// Uniform time grid t0 < t1 split into `steps` intervals.
class Grid {
 public:
  Grid(double t0, double t1, std::size_t steps);

  double t0() const noexcept { return t0_; }
  double t1() const noexcept { return t1_; }
  std::size_t steps() const noexcept { return steps_; }
  std::size_t nodes() const noexcept { return steps_ + 1; }
  double spacing() const noexcept { return h_; }

  /// Time of node i; the last node is pinned to t1 exactly.
  double time(std::size_t i) const noexcept {
    return i >= steps_ ? t1_ : t0_ + static_cast<double>(i) * h_;
  }

  /// Prefix of this grid holding nodes 0..last (same spacing).
  Grid prefix(std::size_t last) const;

 private:
  double t0_;
  double t1_;
  std::size_t steps_;
  double h_;
};

/// States sampled on a Grid, stored row-major (one row per node).
class Trajectory {
 public:
  Trajectory(Grid grid, std::size_t dim, std::vector<double> states, std::vector<std::string> labels = {});

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return grid_.nodes(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  double time(std::size_t node) const noexcept { return grid_.time(node); }
  double value(std::size_t node, std::size_t component) const { return states_[node * dim_ + component]; }
  std::span<const double> state(std::size_t node) const {
    return std::span<const double>(states_).subspan(node * dim_, dim_);
  }
  std::span<const double> front() const { return state(0); }
  std::span<const double> back() const { return state(size() - 1); }

  /// Series of one component across all nodes.
  std::vector<double> component(std::size_t component) const;

  /// Nodes 0..last inclusive. Requires last >= 1.
  Trajectory truncated(std::size_t last) const;

 private:
  Grid grid_;
  std::size_t dim_;
  std::vector<double> states_;
  std::vector<std::string> labels_;
};

/// dx/dt = f(t, x); the callee writes into `dxdt` (same length as x).
using VectorField = std::function<void(double t, std::span<const double> x, std::span<double> dxdt)>;
using ScalarFunction = std::function<double(double)>;
using MultivariateFunction = std::function<double(std::span<const double>)>;
using VectorFunction = std::function<std::vector<double>(std::span<const double>)>;

struct Rk4Options {
  /// Any component with |x| above this aborts with IntegrationDiverged.
  double divergence_limit = 1e12;
  /// Optional early exit, checked after every completed step. Returning true
  /// ends the trajectory at that node.
  std::function<bool(double t, std::span<const double> x)> stop;
  std::vector<std::string> labels;
};

/// Classic fourth-order Runge-Kutta with fixed step. states[0] == x0.
Trajectory rk4_integrate(const VectorField& f, std::span<const double> x0, const Grid& grid,
                         const Rk4Options& options = {});

/// Composite Simpson rule on [a, b]; `panels` must be even and >= 2.
double simpson(const ScalarFunction& g, double a, double b, std::size_t panels);

/// Composite Simpson on samples of a uniform grid. An odd interval count is
/// handled by closing the last interval with a three-point quadratic rule.
double simpson_samples(std::span<const double> values, double spacing);

/// Running integral from node 0 to every node of a uniform grid, fourth-order
/// accurate (Simpson pairs, quadratic rule on the odd leftover interval).
std::vector<double> cumulative_simpson(std::span<const double> values, double spacing);

/// Component i = (g(x + h e_i) - g(x - h e_i)) / (2h).
std::vector<double> central_diff_gradient(const MultivariateFunction& g, std::span<const double> x, double h);

/// Same, with the default step 1e-5 * max(1, |x_i|) per component.
std::vector<double> central_diff_gradient(const MultivariateFunction& g, std::span<const double> x);

/// Row-major m x n Jacobian of F at x using the default scaled step.
std::vector<double> central_diff_jacobian(const VectorFunction& f, std::span<const double> x);

double central_diff(const ScalarFunction& g, double x, double h);
double second_central_diff(const ScalarFunction& g, double x, double h);

struct Bracket {
  double lo;
  double hi;
  std::size_t iterations;

  double midpoint() const noexcept { return lo + 0.5 * (hi - lo); }
};

/// Bisection that keeps the final sign-change bracket. Throws BracketError if
/// g(lo) and g(hi) share a sign, ConvergenceError after max_iter halvings.
Bracket bisect_bracket(const ScalarFunction& g, double lo, double hi, double tol, std::size_t max_iter);

/// Midpoint of the final bracket of bisect_bracket.
double bisect(const ScalarFunction& g, double lo, double hi, double tol, std::size_t max_iter = 200);

}  // namespace econlab
