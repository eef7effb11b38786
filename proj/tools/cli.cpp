#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <memory>
#include <random>
#include <sstream>

#include "econlab/econlab.h"

namespace econlab_cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  ApiError(econlab_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  econlab_status status;
};

void check(econlab_status s, const char* context) {
  if (s != ECONLAB_OK) throw ApiError(s, std::string(context) + ": " + econlab_last_error());
}

int exit_code_for(econlab_status s) {
  switch (s) {
    case ECONLAB_OK: return kExitOk;
    case ECONLAB_E_ARGUMENT: return kExitUsage;
    case ECONLAB_E_DOMAIN:
    case ECONLAB_E_SINGULAR:
    case ECONLAB_E_COMPLEX_SPECTRUM:
    case ECONLAB_E_NOT_DIAGONALIZABLE:
    case ECONLAB_E_STABILITY:
    case ECONLAB_E_INFEASIBLE: return kExitDomain;
    case ECONLAB_E_CONVERGENCE:
    case ECONLAB_E_BRACKET:
    case ECONLAB_E_DIVERGED:
    case ECONLAB_E_HORIZON: return kExitConvergence;
    case ECONLAB_E_IO: return kExitIo;
    case ECONLAB_E_INTERNAL: break;
  }
  return kExitInternal;
}

struct OptionSpec {
  const char* name;
  const char* help;
  bool required = false;
};

struct CommandSpec {
  Subcommand sub;
  const char* name;
  const char* help;
  std::vector<OptionSpec> options;
  std::vector<Format> formats;  // first is the default
};

const std::vector<OptionSpec> kRamseyOptions = {
    {"config", "key=value parameter file, or 'baseline'"},
    {"A", "total factor productivity"},
    {"alpha", "capital share, in (0, 1)"},
    {"theta", "relative risk aversion"},
    {"delta", "depreciation rate"},
    {"alpha-L", "population growth rate"},
    {"alpha-T", "technology growth rate"},
    {"rho", "time preference rate"},
};

std::vector<OptionSpec> ramsey_with(std::vector<OptionSpec> extra) {
  std::vector<OptionSpec> all = kRamseyOptions;
  all.insert(all.end(), extra.begin(), extra.end());
  return all;
}

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> specs = {
      {Subcommand::det, "det", "determinant of a square matrix", {{"matrix", "rows separated by ';', entries by ','", true}},
       {Format::text}},
      {Subcommand::eig, "eig", "eigen-decomposition of a 2x2 matrix",
       {{"matrix", "2x2 matrix 'a,b;c,d'", true}, {"x", "vector to push through the eigenbasis"}}, {Format::text}},
      {Subcommand::cramer, "cramer", "solve A x = b by Cramer's rule",
       {{"matrix", "square matrix", true}, {"rhs", "right-hand side b", true}}, {Format::text}},
      {Subcommand::companion, "companion", "determinant of the companion matrix",
       {{"coeffs", "a0,...,a_{n-1} of the monic polynomial", true}, {"x", "evaluation point", true}}, {Format::text}},
      {Subcommand::taylor, "taylor", "sin, cos and exp(ix) from Maclaurin series",
       {{"x", "argument", true}, {"terms", "nonzero terms per real series (default 24)"}}, {Format::text}},
      {Subcommand::sphere, "sphere", "extrema of x^T A x on the unit sphere",
       {{"matrix", "symmetric matrix", true}, {"tol", "power-iteration tolerance (default 1e-18)"}}, {Format::text}},
      {Subcommand::carbon, "carbon", "carbon stock and airborne fraction table",
       {{"tau-oc", "ocean timescale"},
        {"tau-ld", "land timescale"},
        {"f0", "initial emissions"},
        {"d", "emission growth rate"},
        {"x0", "initial stock"},
        {"t1", "end time (default 200)"},
        {"steps", "RK4 steps (default 2000)"},
        {"every", "row stride (default 100)"}},
       {Format::csv}},
      {Subcommand::crra, "crra", "CRRA utility and its Arrow-Pratt measure",
       {{"theta", "relative risk aversion", true},
        {"x", "consumption", true},
        {"step", "finite-difference step (default 0.01 x)"},
        {"k0", "scale (default 1)"},
        {"k1", "offset (default 0)"}},
       {Format::text}},
      {Subcommand::ramsey_steady, "ramsey-steady", "Ramsey steady state", kRamseyOptions, {Format::text}},
      {Subcommand::ramsey_linearize, "ramsey-linearize", "Jacobian and eigen-system at the steady state",
       kRamseyOptions, {Format::text}},
      {Subcommand::ramsey_saddle, "ramsey-saddle", "initial consumption on the saddle path",
       ramsey_with({{"k0-frac", "k0 / k* (default 0.5)"},
                    {"tol", "bisection tolerance on c0 (default 1e-10)"},
                    {"t-max", "classification horizon (default 2000)"},
                    {"dt", "RK4 step (default 0.05)"}}),
       {Format::text}},
      {Subcommand::ramsey_simulate, "ramsey-simulate", "simulate a path (CSV) or draw the phase diagram (SVG)",
       ramsey_with({{"k0-frac", "k0 / k* (default 0.5)"},
                    {"c0", "initial consumption (default: shooting solution)"},
                    {"t1", "end time (default 200)"},
                    {"dt", "RK4 step (default 0.05)"}}),
       {Format::csv, Format::svg}},
      {Subcommand::ramsey_verify, "ramsey-verify", "run every oracle check", kRamseyOptions, {Format::text}},
  };
  return specs;
}

const CommandSpec& spec_of(Subcommand s) {
  for (const auto& c : commands()) {
    if (c.sub == s) return c;
  }
  throw std::logic_error("unknown subcommand");
}

const char* format_name(Format f) {
  switch (f) {
    case Format::csv: return "csv";
    case Format::svg: return "svg";
    case Format::text: return "text";
  }
  return "?";
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_double(const std::string& text, const std::string& name) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw UsageError("invalid number for --" + name + ": '" + text + "'");
  }
  return v;
}

std::size_t parse_count(const std::string& text, const std::string& name) {
  const double v = parse_double(text, name);
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e9) throw UsageError("--" + name + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::vector<double> parse_vector(const std::string& text, const std::string& name) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item, name));
  if (out.empty()) throw UsageError("--" + name + " is empty");
  return out;
}

struct Matrix {
  std::size_t n;
  std::vector<double> data;
};

Matrix parse_matrix(const std::string& text, const std::string& name) {
  Matrix m{0, {}};
  std::stringstream ss(text);
  std::string row;
  std::size_t rows = 0;
  while (std::getline(ss, row, ';')) {
    const std::vector<double> r = parse_vector(row, name);
    if (rows == 0) m.n = r.size();
    if (r.size() != m.n) throw UsageError("--" + name + ": rows have different lengths");
    m.data.insert(m.data.end(), r.begin(), r.end());
    ++rows;
  }
  if (rows == 0 || rows != m.n) throw UsageError("--" + name + " must be a non-empty square matrix");
  return m;
}

const std::string* find(const RunConfig& c, const char* key) {
  const auto it = c.params.find(key);
  return it == c.params.end() ? nullptr : &it->second;
}

double number_or(const RunConfig& c, const char* key, double fallback) {
  const std::string* v = find(c, key);
  return v ? parse_double(*v, key) : fallback;
}

const std::string& required(const RunConfig& c, const char* key) {
  const std::string* v = find(c, key);
  if (!v) throw UsageError(std::string("missing required option --") + key);
  return *v;
}

struct TextDeleter {
  void operator()(econlab_text* t) const { econlab_text_destroy(t); }
};
struct TrajectoryDeleter {
  void operator()(econlab_trajectory* t) const { econlab_trajectory_destroy(t); }
};
struct RamseyDeleter {
  void operator()(econlab_ramsey* m) const { econlab_ramsey_destroy(m); }
};
using TextPtr = std::unique_ptr<econlab_text, TextDeleter>;
using TrajectoryPtr = std::unique_ptr<econlab_trajectory, TrajectoryDeleter>;
using RamseyPtr = std::unique_ptr<econlab_ramsey, RamseyDeleter>;

std::string take(econlab_text* raw) {
  TextPtr t(raw);
  return std::string(econlab_text_data(t.get()), econlab_text_size(t.get()));
}

bool is_ramsey(Subcommand s) {
  switch (s) {
    case Subcommand::ramsey_steady:
    case Subcommand::ramsey_linearize:
    case Subcommand::ramsey_saddle:
    case Subcommand::ramsey_simulate:
    case Subcommand::ramsey_verify: return true;
    default: return false;
  }
}

// Baseline, then the config file, then individual flags.
RamseyPtr ramsey_model(const RunConfig& c) {
  econlab_ramsey* raw = nullptr;
  check(econlab_ramsey_baseline(&raw), "baseline parameters");
  RamseyPtr model(raw);
  if (const std::string* path = find(c, "config"); path && *path != "baseline") {
    check(econlab_ramsey_load(path->c_str(), model.get(), &raw), "config");
    model.reset(raw);
  }
  static const std::pair<const char*, const char*> flag_keys[] = {
      {"A", "A"},         {"alpha", "alpha"},     {"theta", "theta"}, {"delta", "delta"},
      {"alpha-L", "alpha_L"}, {"alpha-T", "alpha_T"}, {"rho", "rho"},
  };
  std::string overrides;
  for (const auto& [flag, key] : flag_keys) {
    if (const std::string* v = find(c, flag)) {
      parse_double(*v, flag);
      overrides += std::string(key) + " = " + *v + "\n";
    }
  }
  if (!overrides.empty()) {
    check(econlab_ramsey_parse(overrides.c_str(), model.get(), &raw), "parameters");
    model.reset(raw);
  }
  return model;
}

std::string vec2(const double* v) { return "(" + num(v[0]) + ", " + num(v[1]) + ")"; }

std::string run_det(const RunConfig& c) {
  const Matrix m = parse_matrix(required(c, "matrix"), "matrix");
  double det = 0.0;
  check(econlab_det(m.n, m.data.data(), &det), "det");
  return num(det) + "\n";
}

std::string run_eig(const RunConfig& c) {
  const Matrix m = parse_matrix(required(c, "matrix"), "matrix");
  if (m.n != 2) throw UsageError("--matrix must be 2x2 for eig");
  double lambdas[2], vectors[4];
  check(econlab_eig2(m.data.data(), lambdas, vectors), "eig");
  std::string out = "lambda1 = " + num(lambdas[0]) + "\nlambda2 = " + num(lambdas[1]) + "\nv1 = " + vec2(vectors) +
                    "\nv2 = " + vec2(vectors + 2) + "\n";
  if (const std::string* xs = find(c, "x")) {
    const std::vector<double> x = parse_vector(*xs, "x");
    if (x.size() != 2) throw UsageError("--x must have two entries");
    double coords[2], stretched[2], image[2];
    check(econlab_change_of_basis(m.data.data(), x.data(), coords, stretched, image), "change of basis");
    out += "eigen coordinates = " + vec2(coords) + "\nstretched = " + vec2(stretched) + "\nA x = " + vec2(image) + "\n";
  }
  return out;
}

std::string run_cramer(const RunConfig& c) {
  const Matrix m = parse_matrix(required(c, "matrix"), "matrix");
  const std::vector<double> b = parse_vector(required(c, "rhs"), "rhs");
  if (b.size() != m.n) throw UsageError("--rhs length must match the matrix size");
  std::vector<double> x(m.n);
  check(econlab_cramer_solve(m.n, m.data.data(), b.data(), x.data()), "cramer");
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) out += "x" + std::to_string(i + 1) + " = " + num(x[i]) + "\n";
  return out;
}

std::string run_companion(const RunConfig& c) {
  const std::vector<double> a = parse_vector(required(c, "coeffs"), "coeffs");
  double det = 0.0;
  check(econlab_companion_det(a.size(), a.data(), parse_double(required(c, "x"), "x"), &det), "companion");
  return num(det) + "\n";
}

std::string run_taylor(const RunConfig& c) {
  const double x = parse_double(required(c, "x"), "x");
  const std::string* t = find(c, "terms");
  econlab_taylor_result r{};
  check(econlab_taylor(x, t ? parse_count(*t, "terms") : 24, &r), "taylor");
  const double euler = std::hypot(r.exp_re - r.cos_value, r.exp_im - r.sin_value);
  return "sin = " + num(r.sin_value) + "\ncos = " + num(r.cos_value) + "\nexp(ix) = " + num(r.exp_re) + " + " +
         num(r.exp_im) + "i\n|exp(ix) - (cos + i sin)| = " + num(euler) + "\n";
}

std::optional<std::vector<double>> seeded_start(std::size_t n) {
  const char* env = std::getenv("ECON_MATH_LAB_SEED");
  if (!env || !*env) return std::nullopt;
  unsigned long long seed = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("ECON_MATH_LAB_SEED must be a non-negative integer");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> start(n);
  for (double& v : start) v = dist(rng);
  return start;
}

std::string run_sphere(const RunConfig& c) {
  const Matrix m = parse_matrix(required(c, "matrix"), "matrix");
  const auto start = seeded_start(m.n);
  double lmin = 0.0, lmax = 0.0, residual = 0.0;
  std::vector<double> xmin(m.n), xmax(m.n);
  check(econlab_sphere_extrema(m.n, m.data.data(), start ? start->data() : nullptr, number_or(c, "tol", 0.0), &lmin,
                               xmin.data(), &lmax, xmax.data(), &residual),
        "sphere");
  auto list = [](const std::vector<double>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
    return s + ")";
  };
  return "lambda_min = " + num(lmin) + "\nx_min = " + list(xmin) + "\nlambda_max = " + num(lmax) +
         "\nx_max = " + list(xmax) + "\nlagrange residual = " + num(residual) + "\n";
}

std::string run_carbon(const RunConfig& c) {
  econlab_carbon_params p{};
  check(econlab_carbon_defaults(&p), "carbon defaults");
  p.tau_oc = number_or(c, "tau-oc", p.tau_oc);
  p.tau_ld = number_or(c, "tau-ld", p.tau_ld);
  p.f0 = number_or(c, "f0", p.f0);
  p.d = number_or(c, "d", p.d);
  p.x0 = number_or(c, "x0", p.x0);
  const std::string* steps = find(c, "steps");
  const std::string* every = find(c, "every");
  econlab_text* text = nullptr;
  check(econlab_carbon_csv(&p, number_or(c, "t1", 200.0), steps ? parse_count(*steps, "steps") : 2000,
                           every ? parse_count(*every, "every") : 100, &text),
        "carbon");
  return take(text);
}

std::string run_crra(const RunConfig& c) {
  const double theta = parse_double(required(c, "theta"), "theta");
  const double x = parse_double(required(c, "x"), "x");
  const double k0 = number_or(c, "k0", 1.0);
  const double k1 = number_or(c, "k1", 0.0);
  const double h = number_or(c, "step", 0.01 * x);
  double u = 0.0, du = 0.0, ap = 0.0;
  check(econlab_crra_utility(theta, k0, k1, x, &u), "crra");
  check(econlab_crra_marginal(theta, k0, k1, x, &du), "crra");
  check(econlab_crra_arrow_pratt(theta, k0, k1, x, h, &ap), "crra");
  return "U(x) = " + num(u) + "\nU'(x) = " + num(du) + "\nArrow-Pratt = " + num(ap) + "\n";
}

std::string run_ramsey_steady(const RunConfig& c) {
  const RamseyPtr model = ramsey_model(c);
  double k = 0.0, cs = 0.0;
  check(econlab_ramsey_steady(model.get(), &k, &cs), "steady state");
  return "k* = " + num(k) + "\nc* = " + num(cs) + "\nlog k* = " + num(std::log(k)) + "\nlog c* = " + num(std::log(cs)) +
         "\n";
}

std::string run_ramsey_linearize(const RunConfig& c) {
  const RamseyPtr model = ramsey_model(c);
  double jac[4], lambdas[2], vectors[4];
  check(econlab_ramsey_linearize(model.get(), jac, lambdas, vectors), "linearize");
  return "J = [[" + num(jac[0]) + ", " + num(jac[1]) + "], [" + num(jac[2]) + ", " + num(jac[3]) + "]]\nlambda1 = " +
         num(lambdas[0]) + "\nlambda2 = " + num(lambdas[1]) + "\nv1 = " + vec2(vectors) + "\nv2 = " +
         vec2(vectors + 2) + "\n";
}

double initial_capital(const RunConfig& c, econlab_ramsey* model) {
  double k = 0.0, cs = 0.0;
  check(econlab_ramsey_steady(model, &k, &cs), "steady state");
  return number_or(c, "k0-frac", 0.5) * k;
}

std::string run_ramsey_saddle(const RunConfig& c) {
  const RamseyPtr model = ramsey_model(c);
  const double k0 = initial_capital(c, model.get());
  double linear = 0.0;
  check(econlab_ramsey_saddle_linear(model.get(), k0, &linear), "linear saddle path");
  econlab_shooting shot{};
  check(econlab_ramsey_shoot(model.get(), k0, number_or(c, "tol", 0.0), number_or(c, "t-max", 0.0),
                             number_or(c, "dt", 0.0), &shot, nullptr),
        "shooting");
  return "k0 = " + num(k0) + "\nc0 linear = " + num(linear) + "\nc0 shooting = " + num(shot.c0) +
         "\nrelative gap = " + num(std::abs(linear - shot.c0) / shot.c0) + "\nbisection iterations = " +
         std::to_string(shot.iterations) + "\nclosest approach = " + num(shot.closest_approach) + " at t = " +
         num(shot.closest_time) + "\n";
}

std::string run_ramsey_simulate(const RunConfig& c) {
  const RamseyPtr model = ramsey_model(c);
  const double k0 = initial_capital(c, model.get());
  const double dt = number_or(c, "dt", 0.05);
  const double t1 = number_or(c, "t1", 200.0);
  if (!(dt > 0.0) || !(t1 > 0.0)) throw UsageError("--dt and --t1 must be positive");
  const auto steps = static_cast<std::size_t>(std::ceil(t1 / dt - 1e-9));
  double c0 = 0.0;
  if (const std::string* v = find(c, "c0")) {
    c0 = parse_double(*v, "c0");
  } else {
    econlab_shooting shot{};
    check(econlab_ramsey_shoot(model.get(), k0, 0.0, 0.0, dt, &shot, nullptr), "shooting");
    c0 = shot.c0;
  }
  auto simulate = [&](double c_init) {
    econlab_trajectory* raw = nullptr;
    check(econlab_ramsey_simulate(model.get(), k0, c_init, t1, steps, &raw, nullptr), "simulate");
    return TrajectoryPtr(raw);
  };
  econlab_text* text = nullptr;
  if (c.format == Format::svg) {
    // The path itself plus one trial on each side of it.
    const TrajectoryPtr paths[] = {simulate(c0), simulate(c0 * 0.99), simulate(c0 * 1.01)};
    const econlab_trajectory* list[] = {paths[0].get(), paths[1].get(), paths[2].get()};
    check(econlab_ramsey_phase_svg(model.get(), list, 3, &text), "phase diagram");
  } else {
    const TrajectoryPtr path = simulate(c0);
    check(econlab_ramsey_csv(model.get(), path.get(), &text), "csv");
  }
  return take(text);
}

struct VerifyOutcome {
  std::string table;
  std::size_t failed;
};

VerifyOutcome run_ramsey_verify(const RunConfig& c) {
  const RamseyPtr model = ramsey_model(c);
  econlab_text* text = nullptr;
  std::size_t failed = 0;
  check(econlab_ramsey_verify(model.get(), &text, &failed), "verify");
  return {take(text), failed};
}

}  // namespace

const char* subcommand_name(Subcommand s) { return spec_of(s).name; }

ParseResult parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Numerical laboratory for linear algebra, series, carbon-cycle and Ramsey growth examples",
               "econ-math-lab"};
  app.require_subcommand(1, 1);
  app.footer("Exit codes: 0 ok, 2 usage, 3 domain, 4 convergence, 5 I/O.");

  std::deque<std::string> values;  // stable addresses for CLI11 bindings
  std::map<std::string, std::pair<const CommandSpec*, std::vector<std::pair<std::string, CLI::Option*>>>> bound;
  std::map<const CLI::App*, std::pair<std::string*, std::string*>> common;
  for (const CommandSpec& spec : commands()) {
    CLI::App* sc = app.add_subcommand(spec.name, spec.help);
    auto& entry = bound[spec.name];
    entry.first = &spec;
    for (const OptionSpec& o : spec.options) {
      CLI::Option* opt = sc->add_option(std::string("--") + o.name, values.emplace_back(), o.help);
      if (o.required) opt->required();
      entry.second.emplace_back(o.name, opt);
    }
    std::string* output = &values.emplace_back();
    std::string* format = &values.emplace_back();
    sc->add_option("-o,--output", *output, "write the result to this file instead of stdout");
    std::string formats;
    for (Format f : spec.formats) formats += std::string(formats.empty() ? "" : "|") + format_name(f);
    sc->add_option("--format", *format, "output format: " + formats);
    common[sc] = {output, format};
  }

  if (args.empty()) return {std::nullopt, kExitUsage, app.help()};
  if (!args.front().starts_with('-') && !bound.contains(args.front())) {
    return {std::nullopt, kExitUsage,
            "usage error: unknown subcommand '" + args.front() + "'\nRun with --help for usage."};
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    return {std::nullopt, kExitOk, out.str()};
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, kExitUsage, std::string("usage error: ") + e.what() + "\nRun with --help for usage."};
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const auto& [spec, options] = bound.at(chosen->get_name());
  RunConfig config{spec->sub, {}, std::nullopt, spec->formats.front()};
  for (const auto& [name, opt] : options) {
    if (opt->count() > 0) config.params[name] = opt->as<std::string>();
  }
  const auto& [output, format] = common.at(chosen);
  if (!output->empty()) config.output_path = *output;
  if (!format->empty()) {
    const auto it = std::find_if(spec->formats.begin(), spec->formats.end(),
                                 [&](Format f) { return *format == format_name(f); });
    if (it == spec->formats.end()) {
      return {std::nullopt, kExitUsage,
              std::string("usage error: --format ") + *format + " is not available for " + spec->name};
    }
    config.format = *it;
  }

  try {
    for (const char* key : {"A", "alpha", "theta", "delta", "alpha-L", "alpha-T", "rho", "tol", "t-max", "dt", "t1",
                            "k0-frac", "c0", "tau-oc", "tau-ld", "f0", "d", "x0", "step", "k0", "k1", "x"}) {
      if (const std::string* v = find(config, key); v && !(config.subcommand == Subcommand::eig && std::string(key) == "x")) {
        parse_double(*v, key);
      }
    }
    if (is_ramsey(config.subcommand)) ramsey_model(config);
  } catch (const UsageError& e) {
    return {std::nullopt, kExitUsage, std::string("usage error: ") + e.what()};
  } catch (const ApiError& e) {
    return {std::nullopt, exit_code_for(e.status), std::string("error: ") + e.what()};
  }
  return {std::move(config), kExitOk, {}};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const char* name = subcommand_name(config.subcommand);
  std::string artifact;
  int code = kExitOk;
  try {
    switch (config.subcommand) {
      case Subcommand::det: artifact = run_det(config); break;
      case Subcommand::eig: artifact = run_eig(config); break;
      case Subcommand::cramer: artifact = run_cramer(config); break;
      case Subcommand::companion: artifact = run_companion(config); break;
      case Subcommand::taylor: artifact = run_taylor(config); break;
      case Subcommand::sphere: artifact = run_sphere(config); break;
      case Subcommand::carbon: artifact = run_carbon(config); break;
      case Subcommand::crra: artifact = run_crra(config); break;
      case Subcommand::ramsey_steady: artifact = run_ramsey_steady(config); break;
      case Subcommand::ramsey_linearize: artifact = run_ramsey_linearize(config); break;
      case Subcommand::ramsey_saddle: artifact = run_ramsey_saddle(config); break;
      case Subcommand::ramsey_simulate: artifact = run_ramsey_simulate(config); break;
      case Subcommand::ramsey_verify: {
        VerifyOutcome v = run_ramsey_verify(config);
        artifact = std::move(v.table);
        if (v.failed > 0) code = kExitConvergence;
        break;
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << name << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const ApiError& e) {
    err << "error: " << name << ": " << e.what() << "\n";
    return exit_code_for(e.status);
  }

  if (config.output_path) {
    const econlab_status s = econlab_write_file(config.output_path->c_str(), artifact.data(), artifact.size());
    if (s != ECONLAB_OK) {
      err << "error: " << name << ": " << econlab_last_error() << "\n";
      return exit_code_for(s);
    }
  } else {
    out << artifact;
    out.flush();
  }
  if (code != kExitOk) err << "error: " << name << ": one or more checks failed\n";
  return code;
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseResult parsed = parse_args(args);
  if (!parsed.config) {
    (parsed.exit_code == kExitOk ? out : err) << parsed.message << (parsed.message.ends_with('\n') ? "" : "\n");
    return parsed.exit_code;
  }
  return run(*parsed.config, out, err);
}

}  // namespace econlab_cli
