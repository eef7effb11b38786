// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "econlab/carbon.hpp"
#include "econlab/crra.hpp"
#include "econlab/mat2geo.hpp"
#include "econlab/ramsey.hpp"
#include "econlab/series.hpp"
#include "econlab/spectra.hpp"
#include "econlab/verify.hpp"
#include "oracles.hpp"

using namespace econlab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome determinant_area() {
  const Mat2 m{3.0, 1.0, 1.0, 4.0};
  const double det = det2(m);
  const double area = parallelogram_area(m.col1(), m.col2());
  return {std::abs(det - 11.0) <= 1e-12 && std::abs(area - 11.0) <= 1e-12,
          "det = " + fmt(det) + ", area = " + fmt(area)};
}

Outcome eigen_walkthrough() {
  const Mat2 a = 0.5 * Mat2{5.0, -1.0, -1.0, 5.0};
  const BasisChange b = change_of_basis_apply(ascending(eig2(a)), {1.0, 3.0});
  const double err = std::max({norm(b.new_coords - Vec2{2.0, 1.0}), norm(b.stretched - Vec2{4.0, 3.0}),
                               norm(b.y - Vec2{1.0, 7.0}), norm(b.y - a * Vec2{1.0, 3.0})});
  return {err <= 1e-10, "(2,1) -> (4,3) -> (1,7), max error " + fmt(err)};
}

Outcome imaginary_unit() {
  const MatrixComplex i{0.0, 1.0};
  const Mat2 x = i.as_matrix();
  const Mat2 sq = x * x;
  const MatrixComplex p = mc_mul(i, i);
  const bool exact = sq.a11 == -1.0 && sq.a12 == 0.0 && sq.a21 == 0.0 && sq.a22 == -1.0 && p.re == -1.0 && p.im == 0.0;
  return {exact && mc_square_is_minus_identity(i), "X^2 = -I exactly"};
}

Outcome companion_vs_horner() {
  oracle::Rng rng(1004);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = rng.index(1, 8);
    const std::vector<double> a = rng.vector(n, -3.0, 3.0);
    const double x = rng.uniform(-2.0, 2.0);
    const double ref = oracle::horner_monic(a, x);
    worst = std::max(worst, std::abs(companion_det(a, x) - ref) / std::max(1.0, std::abs(ref)));
  }
  const std::vector<double> ones = {1.0, 1.0, 1.0};
  const double at_m1 = companion_det(ones, -1.0);
  const double at_3 = companion_det(ones, 3.0);
  const bool fixed = std::abs(at_m1) <= 1e-12 && std::abs(at_3 - 40.0) <= 1e-12;
  return {worst <= 1e-9 && fixed, "1000 polynomials, worst " + fmt(worst) + "; x=-1 -> " + fmt(at_m1) +
                                      ", x=3 -> " + fmt(at_3)};
}

Outcome cramer_vs_lu() {
  oracle::Rng rng(1005);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = rng.index(1, 6);
    std::vector<double> a = rng.vector(n * n, -1.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] += static_cast<double>(n);
    const std::vector<double> b = rng.vector(n, -5.0, 5.0);
    const std::vector<double> x = cramer_solve(MatN(n, a), b);
    const std::vector<double> ref = oracle::lu_solve(n, a, b);
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(x[i] - ref[i]));
  }
  return {worst <= 1e-8, "500 systems, worst " + fmt(worst)};
}

Outcome quadform_gradient() {
  oracle::Rng rng(1006);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = rng.index(1, 6);
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) m[i * n + j] = m[j * n + i] = rng.uniform(-3.0, 3.0);
    }
    const SymMatN a(n, m);
    const std::vector<double> x = rng.vector(n, -2.0, 2.0);
    const std::vector<double> g = quadform_grad(a, x);
    const std::vector<double> fd =
        central_diff_gradient([&a](std::span<const double> y) { return quadform_eval(a, y); }, x);
    double scale = 0.0;
    for (double v : g) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(g[i] - fd[i]) / std::max(1.0, scale));
  }
  return {worst <= 1e-6, "500 instances, worst relative " + fmt(worst)};
}

// [[3,1],[1,4]] has characteristic polynomial l^2 - 7l + 11, roots (7 +- sqrt 5)/2;
// [[2,1],[1,5]] is the trace-7 matrix with roots (7 +- sqrt 13)/2.
Outcome sphere_eigen() {
  struct Case {
    std::vector<double> m;
    double lo, hi;
  };
  const std::vector<Case> cases = {
      {{3.0, 1.0, 1.0, 4.0}, (7.0 - std::sqrt(5.0)) / 2.0, (7.0 + std::sqrt(5.0)) / 2.0},
      {{2.0, 1.0, 1.0, 5.0}, (7.0 - std::sqrt(13.0)) / 2.0, (7.0 + std::sqrt(13.0)) / 2.0},
  };
  double err = 0.0, res = 0.0;
  for (const Case& c : cases) {
    const auto [q_hi, q_lo] = oracle::quadratic_eigenvalues(c.m[0], c.m[1], c.m[2], c.m[3]);
    const SymMatN a(2, c.m);
    const SphereExtrema s = sphere_extrema(a);
    err = std::max({err, std::abs(s.lambda_min - c.lo), std::abs(s.lambda_max - c.hi), std::abs(q_lo - c.lo),
                    std::abs(q_hi - c.hi)});
    res = std::max({res, lagrange_residual(a, s.x_min, s.lambda_min), lagrange_residual(a, s.x_max, s.lambda_max)});
  }
  return {err <= 1e-8 && res <= 1e-8, "eigenvalue error " + fmt(err) + ", Lagrange residual " + fmt(res)};
}

Outcome airborne_fraction_limit_check() {
  const CarbonParams p = CarbonParams::defaults();
  const Grid grid(0.0, 100.0, 1000);
  const Trajectory rk = concentration_rk4(p, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.nodes(); ++i) {
    const double x = concentration_closed(p, grid.time(i));
    worst = std::max(worst, std::abs(rk.value(i, 0) - x) / x);
  }
  const double af_gap = std::abs(airborne_fraction(p, 200.0) - airborne_fraction_limit(p));
  const CarbonParams q = CarbonParams::make(30.0, 30.0, 10.0, 0.02, 600.0);
  const double limit_err = std::abs(airborne_fraction_limit(q) - 3.0 / 13.0);
  return {worst <= 1e-6 && af_gap <= 1e-3 && limit_err <= 1e-15,
          "RK4 relative " + fmt(worst) + ", |AF(200) - limit| " + fmt(af_gap) + ", limit vs 3/13 " + fmt(limit_err)};
}

Outcome arrow_pratt_recovery() {
  double worst = 0.0;
  for (double theta : {0.5, 1.0, 2.0, 5.0}) {
    const CrraSpec s = CrraSpec::make(theta);
    for (int i = 0; i <= 98; ++i) {
      const double x = 0.2 + 0.1 * i;
      worst = std::max(worst, std::abs(arrow_pratt(s, x, 1e-2 * x) - theta));
    }
  }
  return {worst <= 1e-5, "worst |AP - theta| " + fmt(worst)};
}

Outcome ramsey_steady_state() {
  oracle::Rng rng(1010);
  double worst = 0.0, rhs_worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const RamseyParams p = oracle::random_ramsey(rng);
    const SteadyState ss = steady_state(p);
    const auto [k, c] = oracle::ramsey_steady(p);
    worst = std::max({worst, std::abs(ss.k_star - k) / k, std::abs(ss.c_star - c) / c});
    const Vec2 f = rhs(p, ss.log_k(), ss.log_c());
    rhs_worst = std::max({rhs_worst, std::abs(f.x1), std::abs(f.x2)});
  }
  return {worst <= 1e-9 && rhs_worst <= 1e-10, "oracle gap " + fmt(worst) + ", |rhs| " + fmt(rhs_worst)};
}

Outcome ramsey_jacobian() {
  oracle::Rng rng(1011);
  double worst = 0.0;
  bool a22_zero = true;
  for (int trial = 0; trial < 200; ++trial) {
    const RamseyParams p = oracle::random_ramsey(rng);
    const SteadyState ss = steady_state(p);
    const Mat2 j = jacobian_closed(p);
    const double x[] = {ss.log_k(), ss.log_c()};
    const std::vector<double> fd = central_diff_jacobian(
        [&p](std::span<const double> y) {
          const Vec2 v = rhs(p, y[0], y[1]);
          return std::vector<double>{v.x1, v.x2};
        },
        x);
    worst = std::max({worst, std::abs(fd[0] - j.a11), std::abs(fd[1] - j.a12), std::abs(fd[2] - j.a21),
                      std::abs(fd[3] - j.a22)});
    a22_zero = a22_zero && j.a22 == 0.0;
  }
  return {worst <= 1e-6 && a22_zero, "finite-difference gap " + fmt(worst) + (a22_zero ? ", a22 == 0" : ", a22 != 0")};
}

Outcome ramsey_eigen() {
  oracle::Rng rng(1012);
  double worst = 0.0;
  bool predicate_agrees = true;
  for (int trial = 0; trial < 200; ++trial) {
    const RamseyParams p = oracle::random_ramsey(rng);
    const Mat2 j = jacobian_closed(p);
    bool generic_defective = false;
    EigenDecomp2 g{};
    try {
      g = eig2(j);
    } catch (const NotDiagonalizableError&) {
      generic_defective = true;
    }
    predicate_agrees = predicate_agrees && (is_diagonalizable(p) == !generic_defective);
    if (generic_defective) continue;
    const EigenDecomp2 d = eigen_closed(p);
    // Multisets of (lambda, v), matched by eigenvalue.
    std::vector<std::pair<double, Vec2>> a = {{d.lambda1, d.v1}, {d.lambda2, d.v2}};
    std::vector<std::pair<double, Vec2>> b = {{g.lambda1, g.v1}, {g.lambda2, g.v2}};
    auto by_lambda = [](const auto& l, const auto& r) { return l.first < r.first; };
    std::sort(a.begin(), a.end(), by_lambda);
    std::sort(b.begin(), b.end(), by_lambda);
    for (std::size_t i = 0; i < 2; ++i) {
      worst = std::max({worst, std::abs(a[i].first - b[i].first), norm(a[i].second - b[i].second)});
    }
  }
  return {worst <= 1e-9 && predicate_agrees,
          "max gap " + fmt(worst) + (predicate_agrees ? ", predicate agrees" : ", predicate disagrees")};
}

Outcome saddle_path() {
  const RamseyParams p = RamseyParams::baseline();
  const double k0 = 0.5 * steady_state(p).k_star;
  const double lin = saddle_path_linear(p, k0);
  std::vector<double> closest;
  double c0 = 0.0;
  for (double tol : {1e-7, 1e-8, 1e-9, 1e-10}) {
    ShootingOptions o;
    o.tol = tol;
    const ShootingResult r = shoot_nonlinear(p, k0, o);
    closest.push_back(r.closest_approach);
    c0 = r.c0;
  }
  const double gap = std::abs(lin - c0) / c0;
  bool shrinking = true;
  std::string trail;
  for (std::size_t i = 0; i < closest.size(); ++i) {
    if (i > 0) shrinking = shrinking && closest[i] < closest[i - 1];
    trail += (i ? " > " : "") + fmt(closest[i]);
  }
  return {gap <= 0.02 && shrinking, "c0 gap " + fmt(gap) + ", closest approach " + trail};
}

Outcome foc_consistency() {
  const RamseyParams p = RamseyParams::baseline();
  ShootingOptions o;
  o.tol = 1e-12;
  const ShootingResult r = shoot_nonlinear(p, 0.5 * steady_state(p).k_star, o);
  const Trajectory path = r.path.path.truncated(r.closest_node);
  double euler = 0.0;
  for (double e : euler_residual(p, path)) euler = std::max(euler, std::abs(e));
  const TransversalityReport tv = transversality_check(household_path(p, path), p.alpha_L);
  const TransversalityReport ponzi = transversality_check(ponzi_path(p, Grid(0.0, 200.0, 2000), -1.0), p.alpha_L);
  return {euler < 1e-4 && tv.decaying && !ponzi.decaying,
          "Euler " + fmt(euler) + ", transversality " + (tv.decaying ? "decays" : "does not decay") + " over " +
              fmt(tv.horizon) + ", Ponzi path " + (ponzi.decaying ? "decays" : "does not decay")};
}

Outcome budget_identity() {
  oracle::Rng rng(1015);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double r0 = rng.uniform(0.03, 0.08), amp = rng.uniform(0.0, 0.02), freq = rng.uniform(0.05, 0.3);
    const double w0 = rng.uniform(0.5, 2.0), g = rng.uniform(0.0, 0.03), share = rng.uniform(0.5, 1.2);
    const double alpha_L = rng.uniform(0.0, 0.03), a0 = rng.uniform(0.0, 5.0);
    const TimeFunction r = [=](double t) { return r0 + amp * std::sin(freq * t); };
    const TimeFunction w = [=](double t) { return w0 * std::exp(g * t); };
    const TimeFunction c = [=](double t) { return share * w0 * std::exp(g * t) * (1.0 + 0.1 * std::cos(freq * t)); };
    const Grid grid(0.0, 100.0, 2000);
    const HouseholdPath hp = make_household_path(grid, assets_path(a0, r, w, c, alpha_L, grid), r, w, c, alpha_L);
    std::vector<double> pv(grid.nodes());
    for (std::size_t i = 0; i < pv.size(); ++i) pv[i] = hp.w[i] * hp.nu[i];
    const double scale = std::abs(a0) + simpson_samples(pv, grid.spacing());
    worst = std::max(worst, std::abs(budget_identity_residual(hp, alpha_L)) / scale);
  }
  return {worst < 1e-6, "100 paths, worst relative residual " + fmt(worst)};
}

Outcome linearization_order() {
  const RamseyParams p = RamseyParams::baseline();
  const Grid grid(0.0, 10.0, 1000);
  double lo = 1e9, hi = 0.0;
  for (const auto& [z, w] : std::vector<std::pair<double, double>>{{0.02, -0.01}, {0.02, 0.0}, {0.0, 0.02}, {-0.02, 0.01}}) {
    const double factor = linearization_gap(p, z, w, grid) / linearization_gap(p, 0.5 * z, 0.5 * w, grid);
    lo = std::min(lo, factor);
    hi = std::max(hi, factor);
  }
  return {lo >= 3.5 && hi <= 4.5, "gap factors in [" + fmt(lo) + ", " + fmt(hi) + "]"};
}

Outcome series_identities() {
  double euler = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double x = -M_PI + 2.0 * M_PI * i / 2000.0;
    const MatrixComplex e = exp_i_taylor(x, {24});
    euler = std::max(euler, std::hypot(e.re - std::cos(x), e.im - std::sin(x)));
    euler = std::max(euler, std::hypot(e.re - cos_taylor(x, {24}), e.im - sin_taylor(x, {24})));
  }
  oracle::Rng rng(1017);
  double identity = 0.0;
  for (int i = 0; i < 1000; ++i) {
    identity = std::max(identity, sin_diff_identity_residual(rng.uniform(-2.0 * M_PI, 2.0 * M_PI),
                                                             rng.uniform(-2.0 * M_PI, 2.0 * M_PI)));
  }
  return {euler < 1e-12 && identity < 1e-11, "Euler residual " + fmt(euler) + ", sine difference " + fmt(identity)};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

int shell(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

Outcome cli_determinism() {
  const std::string cli = ECONLAB_CLI_PATH;
  const std::string cfg = ECONLAB_SOURCE_DIR "/config/baseline.cfg";
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"carbon --tau-oc 30 --tau-ld 30 --f0 10 --d 0.02 --x0 600 --t1 200", "csv"},
      {"ramsey-simulate --config " + cfg + " --k0-frac 0.5 --t1 150", "csv"},
      {"ramsey-simulate --config " + cfg + " --k0-frac 0.5 --format svg", "svg"},
  };
  std::string detail;
  bool ok = true;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      const std::string out = "acceptance_cli_" + std::to_string(i) + "_" + std::to_string(rep) + "." + runs[i].second;
      if (shell(cli + " " + runs[i].first + " --output " + out) != 0) {
        ok = false;
        detail += "run failed: " + runs[i].first + "; ";
      }
      const std::string content = slurp(out);
      std::remove(out.c_str());
      if (rep == 0) {
        first = content;
      } else if (content != first || content.empty()) {
        ok = false;
        detail += "output differs: " + runs[i].first + "; ";
      }
    }
  }
  const int verify = shell(cli + " ramsey-verify --config " + cfg + " > acceptance_verify.txt");
  const std::string table = slurp("acceptance_verify.txt");
  std::remove("acceptance_verify.txt");
  if (verify != 0 || table.find("15/15 checks passed") == std::string::npos) {
    ok = false;
    detail += "ramsey-verify exit " + std::to_string(verify) + "; ";
  }
  return {ok, ok ? "3 artifacts byte-identical across runs, ramsey-verify 15/15" : detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"determinant equals parallelogram area", determinant_area},
      {"eigenbasis walk-through", eigen_walkthrough},
      {"matrix imaginary unit squares to -I", imaginary_unit},
      {"companion determinant equals Horner", companion_vs_horner},
      {"Cramer's rule equals LU solve", cramer_vs_lu},
      {"quadratic-form gradient", quadform_gradient},
      {"sphere extrema are eigenvalues", sphere_eigen},
      {"airborne fraction", airborne_fraction_limit_check},
      {"CRRA Arrow-Pratt measure", arrow_pratt_recovery},
      {"Ramsey steady state", ramsey_steady_state},
      {"Ramsey Jacobian", ramsey_jacobian},
      {"Ramsey eigen-system", ramsey_eigen},
      {"saddle path", saddle_path},
      {"first-order conditions", foc_consistency},
      {"budget identity", budget_identity},
      {"linearization order", linearization_order},
      {"series identities", series_identities},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
