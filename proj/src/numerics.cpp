#include "econlab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace econlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::argument: return "argument";
    case ErrorKind::domain: return "domain";
    case ErrorKind::singular: return "singular";
    case ErrorKind::complex_spectrum: return "complex-spectrum";
    case ErrorKind::not_diagonalizable: return "not-diagonalizable";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::bracket: return "bracket";
    case ErrorKind::diverged: return "diverged";
    case ErrorKind::horizon: return "horizon";
    case ErrorKind::stability: return "stability";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

Grid::Grid(double t0, double t1, std::size_t steps) : t0_(t0), t1_(t1), steps_(steps), h_(0.0) {
  if (!std::isfinite(t0) || !std::isfinite(t1) || !(t1 > t0)) {
    throw ArgumentError("grid requires finite t0 < t1");
  }
  if (steps == 0) {
    throw ArgumentError("grid requires at least one step");
  }
  h_ = (t1 - t0) / static_cast<double>(steps);
  if (!(h_ > 0.0) || !std::isfinite(h_)) {
    throw ArgumentError("grid spacing is not a positive finite number");
  }
}

Grid Grid::prefix(std::size_t last) const {
  if (last == 0 || last > steps_) {
    throw ArgumentError("grid prefix must keep between 1 and all steps");
  }
  Grid g = *this;
  g.steps_ = last;
  g.t1_ = time(last);
  return g;
}

Trajectory::Trajectory(Grid grid, std::size_t dim, std::vector<double> states, std::vector<std::string> labels)
    : grid_(std::move(grid)), dim_(dim), states_(std::move(states)), labels_(std::move(labels)) {
  if (dim_ == 0) {
    throw ArgumentError("trajectory dimension must be positive");
  }
  if (states_.size() != grid_.nodes() * dim_) {
    throw ArgumentError("trajectory needs one state per grid node");
  }
  if (!labels_.empty() && labels_.size() != dim_) {
    throw ArgumentError("trajectory labels must name every component");
  }
  for (double v : states_) {
    if (!std::isfinite(v)) {
      throw ArgumentError("trajectory entries must be finite");
    }
  }
}

std::vector<double> Trajectory::component(std::size_t component) const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = value(i, component);
  }
  return out;
}

Trajectory Trajectory::truncated(std::size_t last) const {
  Grid g = grid_.prefix(last);
  std::vector<double> s(states_.begin(), states_.begin() + static_cast<std::ptrdiff_t>((last + 1) * dim_));
  return Trajectory(g, dim_, std::move(s), labels_);
}

namespace {

void check_state(std::span<const double> x, std::size_t step, double limit) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double v = x[j];
    if (std::isnan(v)) {
      std::ostringstream msg;
      msg << "integration produced NaN in component " << j << " at step " << step;
      throw IntegrationDiverged(msg.str(), step, j, 0);
    }
    if (!(std::abs(v) <= limit)) {
      std::ostringstream msg;
      msg << "integration diverged: component " << j << (v > 0 ? " -> +inf" : " -> -inf") << " at step " << step;
      throw IntegrationDiverged(msg.str(), step, j, v > 0 ? 1 : -1);
    }
  }
}

}  // namespace

Trajectory rk4_integrate(const VectorField& f, std::span<const double> x0, const Grid& grid,
                         const Rk4Options& options) {
  const std::size_t n = x0.size();
  if (n == 0) {
    throw ArgumentError("rk4_integrate needs a non-empty state");
  }
  check_state(x0, 0, options.divergence_limit);

  std::vector<double> states;
  states.reserve(grid.nodes() * n);
  states.insert(states.end(), x0.begin(), x0.end());

  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> tmp(n), k1(n), k2(n), k3(n), k4(n);
  const double h = grid.spacing();
  std::size_t last = grid.steps();

  for (std::size_t step = 0; step < grid.steps(); ++step) {
    const double t = grid.time(step);
    f(t, x, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
    f(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
    f(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
    f(t + h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    check_state(x, step + 1, options.divergence_limit);
    states.insert(states.end(), x.begin(), x.end());
    if (options.stop && options.stop(grid.time(step + 1), x)) {
      last = step + 1;
      break;
    }
  }

  if (last == grid.steps()) {
    return Trajectory(grid, n, std::move(states), options.labels);
  }
  return Trajectory(grid.prefix(last), n, std::move(states), options.labels);
}

double simpson(const ScalarFunction& g, double a, double b, std::size_t panels) {
  if (panels < 2 || panels % 2 != 0) {
    throw ArgumentError("simpson needs an even panel count >= 2");
  }
  if (!(a <= b)) {
    throw ArgumentError("simpson needs a <= b");
  }
  if (a == b) return 0.0;
  const double h = (b - a) / static_cast<double>(panels);
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t i = 1; i < panels; ++i) {
    const double x = a + static_cast<double>(i) * h;
    (i % 2 == 1 ? odd : even) += g(x);
  }
  return h / 3.0 * (g(a) + 4.0 * odd + 2.0 * even + g(b));
}

double simpson_samples(std::span<const double> values, double spacing) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * spacing * (values[0] + values[1]);
  const std::size_t intervals = n - 1;
  const std::size_t paired = intervals - intervals % 2;
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 <= paired; i += 2) {
    sum += spacing / 3.0 * (values[i] + 4.0 * values[i + 1] + values[i + 2]);
  }
  if (paired != intervals) {
    // Last interval [n-2, n-1] from the quadratic through the final three samples.
    sum += spacing / 12.0 * (-values[n - 3] + 8.0 * values[n - 2] + 5.0 * values[n - 1]);
  }
  return sum;
}

std::vector<double> cumulative_simpson(std::span<const double> values, double spacing) {
  const std::size_t n = values.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  if (n == 2) {
    out[1] = 0.5 * spacing * (values[0] + values[1]);
    return out;
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (i % 2 == 0) {
      out[i] = out[i - 2] + spacing / 3.0 * (values[i - 2] + 4.0 * values[i - 1] + values[i]);
    } else if (i + 1 < n) {
      // Interval [i-1, i] from the quadratic through i-1, i, i+1.
      out[i] = out[i - 1] + spacing / 12.0 * (5.0 * values[i - 1] + 8.0 * values[i] - values[i + 1]);
    } else {
      out[i] = out[i - 1] + spacing / 12.0 * (-values[i - 2] + 8.0 * values[i - 1] + 5.0 * values[i]);
    }
  }
  return out;
}

std::vector<double> central_diff_gradient(const MultivariateFunction& g, std::span<const double> x, double h) {
  if (!(h > 0.0)) {
    throw ArgumentError("finite-difference step must be positive");
  }
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = g(probe);
    probe[i] = x[i] - h;
    const double down = g(probe);
    probe[i] = x[i];
    grad[i] = (up - down) / (2.0 * h);
  }
  return grad;
}

std::vector<double> central_diff_gradient(const MultivariateFunction& g, std::span<const double> x) {
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = 1e-5 * std::max(1.0, std::abs(x[i]));
    probe[i] = x[i] + h;
    const double up = g(probe);
    probe[i] = x[i] - h;
    const double down = g(probe);
    probe[i] = x[i];
    grad[i] = (up - down) / (2.0 * h);
  }
  return grad;
}

std::vector<double> central_diff_jacobian(const VectorFunction& f, std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> jac;
  std::size_t m = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double h = 1e-5 * std::max(1.0, std::abs(x[j]));
    probe[j] = x[j] + h;
    const std::vector<double> up = f(probe);
    probe[j] = x[j] - h;
    const std::vector<double> down = f(probe);
    probe[j] = x[j];
    if (j == 0) {
      m = up.size();
      jac.assign(m * n, 0.0);
    }
    if (up.size() != m || down.size() != m) {
      throw ArgumentError("vector function changed its output dimension");
    }
    for (std::size_t i = 0; i < m; ++i) {
      jac[i * n + j] = (up[i] - down[i]) / (2.0 * h);
    }
  }
  return jac;
}

double central_diff(const ScalarFunction& g, double x, double h) {
  if (!(h > 0.0)) throw ArgumentError("finite-difference step must be positive");
  return (g(x + h) - g(x - h)) / (2.0 * h);
}

double second_central_diff(const ScalarFunction& g, double x, double h) {
  if (!(h > 0.0)) throw ArgumentError("finite-difference step must be positive");
  return (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h);
}

Bracket bisect_bracket(const ScalarFunction& g, double lo, double hi, double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) {
    throw ArgumentError("bisection tolerance must be positive");
  }
  if (!(lo < hi)) {
    throw ArgumentError("bisection needs lo < hi");
  }
  double glo = g(lo);
  const double ghi = g(hi);
  if (glo == 0.0) return {lo, lo, 0};
  if (ghi == 0.0) return {hi, hi, 0};
  if (!(std::signbit(glo) != std::signbit(ghi)) || std::isnan(glo) || std::isnan(ghi)) {
    throw BracketError("no sign change between bisection endpoints");
  }
  std::size_t iter = 0;
  while (hi - lo > tol) {
    if (iter >= max_iter) {
      throw ConvergenceError("bisection hit its iteration cap", hi - lo);
    }
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double gm = g(mid);
    ++iter;
    if (gm == 0.0) return {mid, mid, iter};
    if (std::signbit(gm) == std::signbit(glo)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return {lo, hi, iter};
}

double bisect(const ScalarFunction& g, double lo, double hi, double tol, std::size_t max_iter) {
  return bisect_bracket(g, lo, hi, tol, max_iter).midpoint();
}

}  // namespace econlab
