#include "econlab/econlab.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "econlab/carbon.hpp"
#include "econlab/config.hpp"
#include "econlab/crra.hpp"
#include "econlab/mat2geo.hpp"
#include "econlab/ramsey.hpp"
#include "econlab/report.hpp"
#include "econlab/series.hpp"
#include "econlab/spectra.hpp"
#include "econlab/verify.hpp"

struct econlab_text {
  std::string data;
};

struct econlab_trajectory {
  econlab::Trajectory traj;
};

struct econlab_ramsey {
  econlab::RamseyParams params;
};

namespace {

thread_local std::string g_last_error;

econlab_status status_of(econlab::ErrorKind kind) {
  using econlab::ErrorKind;
  switch (kind) {
    case ErrorKind::argument: return ECONLAB_E_ARGUMENT;
    case ErrorKind::domain: return ECONLAB_E_DOMAIN;
    case ErrorKind::singular: return ECONLAB_E_SINGULAR;
    case ErrorKind::complex_spectrum: return ECONLAB_E_COMPLEX_SPECTRUM;
    case ErrorKind::not_diagonalizable: return ECONLAB_E_NOT_DIAGONALIZABLE;
    case ErrorKind::convergence: return ECONLAB_E_CONVERGENCE;
    case ErrorKind::bracket: return ECONLAB_E_BRACKET;
    case ErrorKind::diverged: return ECONLAB_E_DIVERGED;
    case ErrorKind::horizon: return ECONLAB_E_HORIZON;
    case ErrorKind::stability: return ECONLAB_E_STABILITY;
    case ErrorKind::infeasible: return ECONLAB_E_INFEASIBLE;
    case ErrorKind::io: return ECONLAB_E_IO;
  }
  return ECONLAB_E_INTERNAL;
}

template <typename F>
econlab_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return ECONLAB_OK;
  } catch (const econlab::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return ECONLAB_E_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw econlab::ArgumentError(what);
}

econlab::Mat2 mat2(const double m[4]) { return {m[0], m[1], m[2], m[3]}; }

econlab::MatN matn(std::size_t n, const double* m) {
  require(n >= 1 && m != nullptr, "matrix must be non-empty");
  return econlab::MatN(n, std::vector<double>(m, m + n * n));
}

econlab_text* new_text(std::string s) { return new econlab_text{std::move(s)}; }

econlab::CrraSpec crra(double theta, double k0, double k1) { return econlab::CrraSpec::make(theta, k0, k1); }

econlab_ramsey_values values_of(const econlab::RamseyParams& p) {
  return {p.A_tfp, p.alpha, p.theta, p.delta, p.alpha_L, p.alpha_T, p.rho};
}

econlab_path_fate fate_of(econlab::PathFate f) {
  switch (f) {
    case econlab::PathFate::bounded: return ECONLAB_PATH_BOUNDED;
    case econlab::PathFate::consumption_explodes: return ECONLAB_PATH_CONSUMPTION_EXPLODES;
    case econlab::PathFate::consumption_collapses: return ECONLAB_PATH_CONSUMPTION_COLLAPSES;
  }
  return ECONLAB_PATH_BOUNDED;
}

}  // namespace

extern "C" {

const char* econlab_last_error(void) { return g_last_error.c_str(); }

const char* econlab_status_name(econlab_status status) {
  switch (status) {
    case ECONLAB_OK: return "ok";
    case ECONLAB_E_ARGUMENT: return "argument";
    case ECONLAB_E_DOMAIN: return "domain";
    case ECONLAB_E_SINGULAR: return "singular";
    case ECONLAB_E_COMPLEX_SPECTRUM: return "complex-spectrum";
    case ECONLAB_E_NOT_DIAGONALIZABLE: return "not-diagonalizable";
    case ECONLAB_E_CONVERGENCE: return "convergence";
    case ECONLAB_E_BRACKET: return "bracket";
    case ECONLAB_E_DIVERGED: return "diverged";
    case ECONLAB_E_HORIZON: return "horizon";
    case ECONLAB_E_STABILITY: return "stability";
    case ECONLAB_E_INFEASIBLE: return "infeasible";
    case ECONLAB_E_IO: return "io";
    case ECONLAB_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* econlab_text_data(const econlab_text* text) { return text ? text->data.c_str() : ""; }
size_t econlab_text_size(const econlab_text* text) { return text ? text->data.size() : 0; }
void econlab_text_destroy(econlab_text* text) { delete text; }

econlab_status econlab_write_file(const char* path, const char* data, size_t size) {
  return guard([&] {
    require(path != nullptr && (data != nullptr || size == 0), "path and data are required");
    econlab::write_text_file(path, std::string_view(data ? data : "", size));
  });
}

size_t econlab_trajectory_size(const econlab_trajectory* traj) { return traj ? traj->traj.size() : 0; }
size_t econlab_trajectory_dim(const econlab_trajectory* traj) { return traj ? traj->traj.dim() : 0; }
double econlab_trajectory_time(const econlab_trajectory* traj, size_t node) { return traj->traj.time(node); }
double econlab_trajectory_value(const econlab_trajectory* traj, size_t node, size_t component) {
  return traj->traj.value(node, component);
}
void econlab_trajectory_destroy(econlab_trajectory* traj) { delete traj; }

econlab_status econlab_rk4(econlab_field_fn field, void* user, size_t dim, const double* x0, double t0, double t1,
                           size_t steps, econlab_trajectory** out) {
  return guard([&] {
    require(field != nullptr && x0 != nullptr && out != nullptr && dim >= 1, "field, x0 and out are required");
    const econlab::VectorField f = [field, user](double t, std::span<const double> x, std::span<double> dx) {
      field(t, x.data(), dx.data(), user);
    };
    econlab::Trajectory traj =
        econlab::rk4_integrate(f, std::span<const double>(x0, dim), econlab::Grid(t0, t1, steps));
    *out = new econlab_trajectory{std::move(traj)};
  });
}

econlab_status econlab_assets_path(double a0, econlab_time_fn r, econlab_time_fn w, econlab_time_fn c, void* user,
                                   double alpha_L, double t0, double t1, size_t steps, double* a_out) {
  return guard([&] {
    require(r && w && c && a_out, "r, w, c and a_out are required");
    const auto wrap = [user](econlab_time_fn fn) { return econlab::TimeFunction([fn, user](double t) { return fn(t, user); }); };
    const std::vector<double> a = econlab::assets_path(a0, wrap(r), wrap(w), wrap(c), alpha_L, econlab::Grid(t0, t1, steps));
    std::copy(a.begin(), a.end(), a_out);
  });
}

econlab_status econlab_det(size_t n, const double* matrix, double* det) {
  return guard([&] {
    require(det != nullptr, "det is required");
    *det = econlab::detN(matn(n, matrix));
  });
}

econlab_status econlab_parallelogram_area(const double v1[2], const double v2[2], double* area) {
  return guard([&] {
    require(v1 && v2 && area, "v1, v2 and area are required");
    *area = econlab::parallelogram_area({v1[0], v1[1]}, {v2[0], v2[1]});
  });
}

econlab_status econlab_eig2(const double matrix[4], double lambdas[2], double vectors[4]) {
  return guard([&] {
    require(matrix && lambdas && vectors, "matrix, lambdas and vectors are required");
    const econlab::EigenDecomp2 d = econlab::eig2(mat2(matrix));
    lambdas[0] = d.lambda1;
    lambdas[1] = d.lambda2;
    vectors[0] = d.v1.x1;
    vectors[1] = d.v1.x2;
    vectors[2] = d.v2.x1;
    vectors[3] = d.v2.x2;
  });
}

econlab_status econlab_change_of_basis(const double matrix[4], const double x[2], double coords[2],
                                       double stretched[2], double image[2]) {
  return guard([&] {
    require(matrix && x && coords && stretched && image, "all arguments are required");
    const econlab::BasisChange b =
        econlab::change_of_basis_apply(econlab::ascending(econlab::eig2(mat2(matrix))), {x[0], x[1]});
    coords[0] = b.new_coords.x1;
    coords[1] = b.new_coords.x2;
    stretched[0] = b.stretched.x1;
    stretched[1] = b.stretched.x2;
    image[0] = b.y.x1;
    image[1] = b.y.x2;
  });
}

econlab_status econlab_cramer_solve(size_t n, const double* matrix, const double* rhs, double* x) {
  return guard([&] {
    require(rhs && x, "rhs and x are required");
    const std::vector<double> sol = econlab::cramer_solve(matn(n, matrix), std::span<const double>(rhs, n));
    std::copy(sol.begin(), sol.end(), x);
  });
}

econlab_status econlab_companion_det(size_t n, const double* coeffs, double x, double* det) {
  return guard([&] {
    require(coeffs && det && n >= 1, "coeffs and det are required");
    *det = econlab::companion_det(std::span<const double>(coeffs, n), x);
  });
}

econlab_status econlab_taylor(double x, size_t terms, econlab_taylor_result* out) {
  return guard([&] {
    require(out != nullptr, "out is required");
    require(terms >= 1, "terms must be positive");
    const econlab::TaylorSpec spec{terms};
    const econlab::MatrixComplex e = econlab::exp_i_taylor(x, spec);
    *out = {econlab::sin_taylor(x, spec), econlab::cos_taylor(x, spec), e.re, e.im};
  });
}

econlab_status econlab_sphere_extrema(size_t n, const double* matrix, const double* start, double tol,
                                      double* lambda_min, double* x_min, double* lambda_max, double* x_max,
                                      double* residual) {
  return guard([&] {
    require(lambda_min && x_min && lambda_max && x_max, "outputs are required");
    const econlab::SymMatN a(matn(n, matrix));
    std::optional<std::vector<double>> s;
    if (start) s = std::vector<double>(start, start + n);
    const econlab::SphereExtrema r = econlab::sphere_extrema(a, tol > 0.0 ? tol : 1e-18, 200000, s);
    *lambda_min = r.lambda_min;
    *lambda_max = r.lambda_max;
    std::copy(r.x_min.begin(), r.x_min.end(), x_min);
    std::copy(r.x_max.begin(), r.x_max.end(), x_max);
    if (residual) {
      *residual = std::max(econlab::lagrange_residual(a, r.x_min, r.lambda_min),
                           econlab::lagrange_residual(a, r.x_max, r.lambda_max));
    }
  });
}

econlab_status econlab_carbon_defaults(econlab_carbon_params* out) {
  return guard([&] {
    require(out != nullptr, "out is required");
    const econlab::CarbonParams p = econlab::CarbonParams::defaults();
    *out = {p.tau_oc, p.tau_ld, p.f0, p.d, p.x0};
  });
}

econlab_status econlab_carbon_csv(const econlab_carbon_params* params, double t1, size_t steps, size_t every,
                                  econlab_text** out) {
  return guard([&] {
    require(params && out, "params and out are required");
    const econlab::CarbonParams p =
        econlab::CarbonParams::make(params->tau_oc, params->tau_ld, params->f0, params->d, params->x0);
    *out = new_text(econlab::carbon_csv(econlab::carbon_table(p, econlab::Grid(0.0, t1, steps), every)));
  });
}

econlab_status econlab_crra_utility(double theta, double k0, double k1, double x, double* u) {
  return guard([&] {
    require(u != nullptr, "u is required");
    *u = econlab::utility(crra(theta, k0, k1), x);
  });
}

econlab_status econlab_crra_marginal(double theta, double k0, double k1, double x, double* du) {
  return guard([&] {
    require(du != nullptr, "du is required");
    *du = econlab::marginal(crra(theta, k0, k1), x);
  });
}

econlab_status econlab_crra_arrow_pratt(double theta, double k0, double k1, double x, double h, double* measure) {
  return guard([&] {
    require(measure != nullptr, "measure is required");
    *measure = econlab::arrow_pratt(crra(theta, k0, k1), x, h);
  });
}

econlab_status econlab_ramsey_create(const econlab_ramsey_values* v, econlab_ramsey** out) {
  return guard([&] {
    require(v && out, "values and out are required");
    *out = new econlab_ramsey{
        econlab::RamseyParams::make(v->A, v->alpha, v->theta, v->delta, v->alpha_L, v->alpha_T, v->rho)};
  });
}

econlab_status econlab_ramsey_baseline(econlab_ramsey** out) {
  return guard([&] {
    require(out != nullptr, "out is required");
    *out = new econlab_ramsey{econlab::RamseyParams::baseline()};
  });
}

econlab_status econlab_ramsey_load(const char* path, const econlab_ramsey* base, econlab_ramsey** out) {
  return guard([&] {
    require(path && out, "path and out are required");
    const econlab::RamseyParams b = base ? base->params : econlab::RamseyParams::baseline();
    *out = new econlab_ramsey{econlab::ramsey_params_from(econlab::load_key_values(path), b)};
  });
}

econlab_status econlab_ramsey_parse(const char* text, const econlab_ramsey* base, econlab_ramsey** out) {
  return guard([&] {
    require(text && out, "text and out are required");
    const econlab::RamseyParams b = base ? base->params : econlab::RamseyParams::baseline();
    *out = new econlab_ramsey{econlab::ramsey_params_from(econlab::parse_key_values(text), b)};
  });
}

econlab_status econlab_ramsey_get(const econlab_ramsey* model, econlab_ramsey_values* out) {
  return guard([&] {
    require(model && out, "model and out are required");
    *out = values_of(model->params);
  });
}

void econlab_ramsey_destroy(econlab_ramsey* model) { delete model; }

econlab_status econlab_ramsey_steady(const econlab_ramsey* model, double* k_star, double* c_star) {
  return guard([&] {
    require(model && k_star && c_star, "model and outputs are required");
    const econlab::SteadyState ss = econlab::steady_state(model->params);
    *k_star = ss.k_star;
    *c_star = ss.c_star;
  });
}

econlab_status econlab_ramsey_linearize(const econlab_ramsey* model, double jacobian[4], double lambdas[2],
                                        double vectors[4]) {
  return guard([&] {
    require(model && jacobian && lambdas && vectors, "model and outputs are required");
    const econlab::LinearizedSystem lin = econlab::linearize(model->params);
    jacobian[0] = lin.jac.a11;
    jacobian[1] = lin.jac.a12;
    jacobian[2] = lin.jac.a21;
    jacobian[3] = lin.jac.a22;
    lambdas[0] = lin.eigen.lambda1;
    lambdas[1] = lin.eigen.lambda2;
    vectors[0] = lin.eigen.v1.x1;
    vectors[1] = lin.eigen.v1.x2;
    vectors[2] = lin.eigen.v2.x1;
    vectors[3] = lin.eigen.v2.x2;
  });
}

econlab_status econlab_ramsey_saddle_linear(const econlab_ramsey* model, double k0, double* c0) {
  return guard([&] {
    require(model && c0, "model and c0 are required");
    *c0 = econlab::saddle_path_linear(model->params, k0);
  });
}

econlab_status econlab_ramsey_shoot(const econlab_ramsey* model, double k0, double tol, double t_max, double dt,
                                    econlab_shooting* out, econlab_trajectory** path) {
  return guard([&] {
    require(model && out, "model and out are required");
    econlab::ShootingOptions opts;
    if (tol > 0.0) opts.tol = tol;
    if (t_max > 0.0) opts.t_max = t_max;
    if (dt > 0.0) opts.dt = dt;
    econlab::ShootingResult r = econlab::shoot_nonlinear(model->params, k0, opts);
    *out = {r.c0, r.bracket_lo, r.bracket_hi, r.iterations, r.closest_approach,
            r.path.path.time(r.closest_node)};
    if (path) *path = new econlab_trajectory{std::move(r.path.path)};
  });
}

econlab_status econlab_ramsey_simulate(const econlab_ramsey* model, double k0, double c0, double t1, size_t steps,
                                       econlab_trajectory** out, econlab_path_fate* fate) {
  return guard([&] {
    require(model && out, "model and out are required");
    econlab::Simulation s = econlab::simulate_classified(model->params, k0, c0, econlab::Grid(0.0, t1, steps));
    if (fate) *fate = fate_of(s.fate);
    *out = new econlab_trajectory{std::move(s.path)};
  });
}

econlab_status econlab_ramsey_csv(const econlab_ramsey* model, const econlab_trajectory* traj, econlab_text** out) {
  return guard([&] {
    require(model && traj && out, "model, trajectory and out are required");
    *out = new_text(econlab::ramsey_csv(model->params, traj->traj));
  });
}

econlab_status econlab_ramsey_phase_svg(const econlab_ramsey* model, const econlab_trajectory* const* trajectories,
                                        size_t count, econlab_text** out) {
  return guard([&] {
    require(model && out && (trajectories || count == 0), "model and out are required");
    std::vector<econlab::Trajectory> list;
    for (size_t i = 0; i < count; ++i) {
      require(trajectories[i] != nullptr, "null trajectory");
      list.push_back(trajectories[i]->traj);
    }
    *out = new_text(econlab::render_phase_svg(model->params, list, econlab::steady_state(model->params)));
  });
}

econlab_status econlab_ramsey_verify(const econlab_ramsey* model, econlab_text** table, size_t* failed) {
  return guard([&] {
    require(model && table, "model and table are required");
    const std::vector<econlab::VerifyCheck> checks = econlab::verify_ramsey(model->params);
    if (failed) {
      *failed = static_cast<size_t>(
          std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
    }
    *table = new_text(econlab::verify_table(checks));
  });
}

}  // extern "C"
