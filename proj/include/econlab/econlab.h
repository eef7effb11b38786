#ifndef ECONLAB_ECONLAB_H
#define ECONLAB_ECONLAB_H

/* C interface to the econlab numerical core. Every function returns an
 * econlab_status; on failure the thread-local econlab_last_error() holds a
 * message. Out-parameters are left untouched on failure. Matrices are dense
 * and row-major. */

#include <stddef.h>

#if defined(_WIN32)
#  ifdef ECONLAB_BUILDING_LIBRARY
#    define ECONLAB_API __declspec(dllexport)
#  else
#    define ECONLAB_API __declspec(dllimport)
#  endif
#else
#  define ECONLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum econlab_status {
  ECONLAB_OK = 0,
  ECONLAB_E_ARGUMENT = 1,
  ECONLAB_E_DOMAIN = 2,
  ECONLAB_E_SINGULAR = 3,
  ECONLAB_E_COMPLEX_SPECTRUM = 4,
  ECONLAB_E_NOT_DIAGONALIZABLE = 5,
  ECONLAB_E_CONVERGENCE = 6,
  ECONLAB_E_BRACKET = 7,
  ECONLAB_E_DIVERGED = 8,
  ECONLAB_E_HORIZON = 9,
  ECONLAB_E_STABILITY = 10,
  ECONLAB_E_INFEASIBLE = 11,
  ECONLAB_E_IO = 12,
  ECONLAB_E_INTERNAL = 13
} econlab_status;

ECONLAB_API const char* econlab_last_error(void);
ECONLAB_API const char* econlab_status_name(econlab_status status);

/* ---- owned text (CSV, SVG, tables) ---- */

typedef struct econlab_text econlab_text;

ECONLAB_API const char* econlab_text_data(const econlab_text* text);
ECONLAB_API size_t econlab_text_size(const econlab_text* text);
ECONLAB_API void econlab_text_destroy(econlab_text* text);

ECONLAB_API econlab_status econlab_write_file(const char* path, const char* data, size_t size);

/* ---- trajectories ---- */

typedef struct econlab_trajectory econlab_trajectory;

ECONLAB_API size_t econlab_trajectory_size(const econlab_trajectory* traj);
ECONLAB_API size_t econlab_trajectory_dim(const econlab_trajectory* traj);
ECONLAB_API double econlab_trajectory_time(const econlab_trajectory* traj, size_t node);
ECONLAB_API double econlab_trajectory_value(const econlab_trajectory* traj, size_t node, size_t component);
ECONLAB_API void econlab_trajectory_destroy(econlab_trajectory* traj);

/* ---- generic numerics ---- */

typedef void (*econlab_field_fn)(double t, const double* x, double* dxdt, void* user);
typedef double (*econlab_time_fn)(double t, void* user);

/* RK4 on [t0, t1] with `steps` intervals. */
ECONLAB_API econlab_status econlab_rk4(econlab_field_fn field, void* user, size_t dim, const double* x0, double t0,
                                       double t1, size_t steps, econlab_trajectory** out);

/* Per-capita asset path on the grid; `a_out` receives steps + 1 values. */
ECONLAB_API econlab_status econlab_assets_path(double a0, econlab_time_fn r, econlab_time_fn w, econlab_time_fn c,
                                               void* user, double alpha_L, double t0, double t1, size_t steps,
                                               double* a_out);

/* ---- linear algebra ---- */

ECONLAB_API econlab_status econlab_det(size_t n, const double* matrix, double* det);
ECONLAB_API econlab_status econlab_parallelogram_area(const double v1[2], const double v2[2], double* area);

/* lambdas[0] >= lambdas[1]; vectors holds v1 then v2, each scaled so the
 * component of largest magnitude is +1. */
ECONLAB_API econlab_status econlab_eig2(const double matrix[4], double lambdas[2], double vectors[4]);

/* Eigen-coordinates of x (ascending eigenvalue order), their stretch by the
 * eigenvalues, and the image A x rebuilt in the original basis. */
ECONLAB_API econlab_status econlab_change_of_basis(const double matrix[4], const double x[2], double coords[2],
                                                   double stretched[2], double image[2]);

ECONLAB_API econlab_status econlab_cramer_solve(size_t n, const double* matrix, const double* rhs, double* x);

/* det(x I - C) for the monic polynomial with lower coefficients a0..a_{n-1}. */
ECONLAB_API econlab_status econlab_companion_det(size_t n, const double* coeffs, double x, double* det);

/* ---- series ---- */

typedef struct econlab_taylor_result {
  double sin_value;
  double cos_value;
  double exp_re;
  double exp_im;
} econlab_taylor_result;

ECONLAB_API econlab_status econlab_taylor(double x, size_t terms, econlab_taylor_result* out);

/* ---- quadratic forms ---- */

/* Extrema of x^T A x on the unit sphere. `start` may be NULL; x_min and
 * x_max receive n values each. */
ECONLAB_API econlab_status econlab_sphere_extrema(size_t n, const double* matrix, const double* start, double tol,
                                                  double* lambda_min, double* x_min, double* lambda_max,
                                                  double* x_max, double* residual);

/* ---- carbon cycle ---- */

typedef struct econlab_carbon_params {
  double tau_oc;
  double tau_ld;
  double f0;
  double d;
  double x0;
} econlab_carbon_params;

ECONLAB_API econlab_status econlab_carbon_defaults(econlab_carbon_params* out);

/* CSV over [0, t1] with `steps` RK4 intervals, every `every`-th node plus the last. */
ECONLAB_API econlab_status econlab_carbon_csv(const econlab_carbon_params* params, double t1, size_t steps,
                                              size_t every, econlab_text** out);

/* ---- CRRA utility ---- */

ECONLAB_API econlab_status econlab_crra_utility(double theta, double k0, double k1, double x, double* u);
ECONLAB_API econlab_status econlab_crra_marginal(double theta, double k0, double k1, double x, double* du);
ECONLAB_API econlab_status econlab_crra_arrow_pratt(double theta, double k0, double k1, double x, double h,
                                                    double* measure);

/* ---- Ramsey model ---- */

typedef struct econlab_ramsey econlab_ramsey;

typedef struct econlab_ramsey_values {
  double A;
  double alpha;
  double theta;
  double delta;
  double alpha_L;
  double alpha_T;
  double rho;
} econlab_ramsey_values;

ECONLAB_API econlab_status econlab_ramsey_create(const econlab_ramsey_values* values, econlab_ramsey** out);
ECONLAB_API econlab_status econlab_ramsey_baseline(econlab_ramsey** out);

/* Reads a key=value file; keys it names override `base` (baseline if NULL). */
ECONLAB_API econlab_status econlab_ramsey_load(const char* path, const econlab_ramsey* base, econlab_ramsey** out);

/* Applies key=value text (same format as files) on top of `base`. */
ECONLAB_API econlab_status econlab_ramsey_parse(const char* text, const econlab_ramsey* base, econlab_ramsey** out);

ECONLAB_API econlab_status econlab_ramsey_get(const econlab_ramsey* model, econlab_ramsey_values* out);
ECONLAB_API void econlab_ramsey_destroy(econlab_ramsey* model);

ECONLAB_API econlab_status econlab_ramsey_steady(const econlab_ramsey* model, double* k_star, double* c_star);

/* Jacobian (row-major) and its eigen-system at the steady state. */
ECONLAB_API econlab_status econlab_ramsey_linearize(const econlab_ramsey* model, double jacobian[4],
                                                    double lambdas[2], double vectors[4]);

ECONLAB_API econlab_status econlab_ramsey_saddle_linear(const econlab_ramsey* model, double k0, double* c0);

typedef enum econlab_path_fate {
  ECONLAB_PATH_BOUNDED = 0,
  ECONLAB_PATH_CONSUMPTION_EXPLODES = 1,
  ECONLAB_PATH_CONSUMPTION_COLLAPSES = 2
} econlab_path_fate;

typedef struct econlab_shooting {
  double c0;
  double bracket_lo;
  double bracket_hi;
  size_t iterations;
  double closest_approach;
  double closest_time;
} econlab_shooting;

/* Zero tol/t_max/dt select the defaults. `path` may be NULL. */
ECONLAB_API econlab_status econlab_ramsey_shoot(const econlab_ramsey* model, double k0, double tol, double t_max,
                                                double dt, econlab_shooting* out, econlab_trajectory** path);

/* Classified simulation on [0, t1]; the path ends early when it leaves the
 * neighbourhood of the steady state. `fate` may be NULL. */
ECONLAB_API econlab_status econlab_ramsey_simulate(const econlab_ramsey* model, double k0, double c0, double t1,
                                                   size_t steps, econlab_trajectory** out, econlab_path_fate* fate);

ECONLAB_API econlab_status econlab_ramsey_csv(const econlab_ramsey* model, const econlab_trajectory* traj,
                                              econlab_text** out);

ECONLAB_API econlab_status econlab_ramsey_phase_svg(const econlab_ramsey* model,
                                                    const econlab_trajectory* const* trajectories, size_t count,
                                                    econlab_text** out);

/* Runs every oracle check; `failed` receives the number of failing checks. */
ECONLAB_API econlab_status econlab_ramsey_verify(const econlab_ramsey* model, econlab_text** table, size_t* failed);

#ifdef __cplusplus
}
#endif

#endif
