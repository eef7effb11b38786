#include "econlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace econlab {

namespace {

template <typename... Args>
std::string printf_string(const char* fmt, Args... args) {
  char buf[128];
  const int n = std::snprintf(buf, sizeof buf, fmt, args...);
  return std::string(buf, static_cast<std::size_t>(std::max(n, 0)));
}

std::string join_row(std::initializer_list<double> values) {
  std::string line;
  for (double v : values) {
    if (!line.empty()) line += ',';
    line += format_number(v);
  }
  line += '\n';
  return line;
}

}  // namespace

std::string format_number(double v) {
  std::string s = printf_string("%.12g", v);
  std::replace(s.begin(), s.end(), ',', '.');
  return s;
}

std::string carbon_csv(const std::vector<CarbonRow>& rows) {
  std::string out = "t,f,x_closed,x_rk4,AF,AF_limit\n";
  for (const CarbonRow& r : rows) out += join_row({r.t, r.emissions, r.x_closed, r.x_rk4, r.af, r.af_limit});
  return out;
}

std::string ramsey_csv(const RamseyParams& p, const Trajectory& traj) {
  if (traj.dim() != 2) throw ArgumentError("Ramsey trajectory must hold (log k, log c)");
  std::string out = "t,log_k,log_c,k,c,r,w\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double lk = traj.value(i, 0);
    const double lc = traj.value(i, 1);
    const double k = std::exp(lk);
    out += join_row({traj.time(i), lk, lc, k, std::exp(lc), firm_foc_r(p, k), wage(p, k, 0.0)});
  }
  return out;
}

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 60.0;
constexpr double kMarkerRadius = 4.0;
constexpr std::size_t kLocusSamples = 200;

struct Frame {
  double x_lo, x_hi, y_lo, y_hi;

  double px(double x) const { return kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2.0 * kMargin); }
  double py(double y) const { return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * (kHeight - 2.0 * kMargin); }
  bool contains(double x, double y) const { return x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi; }
};

Frame make_frame(const std::vector<Trajectory>& trajectories, const SteadyState& ss) {
  const double lk = ss.log_k();
  const double lc = ss.log_c();
  Frame f{lk - 1.0, lk + 1.0, lc - 1.0, lc + 1.0};
  for (const Trajectory& t : trajectories) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      f.x_lo = std::min(f.x_lo, t.value(i, 0));
      f.x_hi = std::max(f.x_hi, t.value(i, 0));
      f.y_lo = std::min(f.y_lo, t.value(i, 1));
      f.y_hi = std::max(f.y_hi, t.value(i, 1));
    }
  }
  f.x_lo = std::max(f.x_lo, lk - kExitLogDeviation);
  f.x_hi = std::min(f.x_hi, lk + kExitLogDeviation);
  f.y_lo = std::max(f.y_lo, lc - kExitLogDeviation);
  f.y_hi = std::min(f.y_hi, lc + kExitLogDeviation);
  return f;
}

std::string point(const Frame& f, double x, double y) { return printf_string("%.2f,%.2f", f.px(x), f.py(y)); }

std::string polyline(const std::vector<std::string>& pts, const char* cls) {
  std::string out = std::string("<polyline class=\"") + cls + "\" fill=\"none\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += pts[i];
  }
  return out + "\"/>\n";
}

// Segments of the kdot = 0 locus: for each log k, the log c where d/dt log k
// changes sign (d/dt log k is strictly decreasing in log c).
std::vector<std::vector<std::string>> capital_locus(const RamseyParams& p, const Frame& f) {
  std::vector<std::vector<std::string>> segments(1);
  for (std::size_t i = 0; i <= kLocusSamples; ++i) {
    const double x = f.x_lo + (f.x_hi - f.x_lo) * static_cast<double>(i) / kLocusSamples;
    const ScalarFunction g = [&](double y) { return rhs(p, x, y).x1; };
    const double lo = f.y_lo - 50.0;
    const double hi = f.y_hi + 50.0;
    bool found = false;
    if (g(lo) > 0.0 && g(hi) < 0.0) {
      const double y = bisect(g, lo, hi, 1e-10);
      if (f.contains(x, y)) {
        segments.back().push_back(point(f, x, y));
        found = true;
      }
    }
    if (!found && !segments.back().empty()) segments.emplace_back();
  }
  std::erase_if(segments, [](const auto& s) { return s.size() < 2; });
  return segments;
}

}  // namespace

std::string render_phase_svg(const RamseyParams& p, const std::vector<Trajectory>& trajectories,
                             const SteadyState& steady) {
  for (const Trajectory& t : trajectories) {
    if (t.dim() != 2) throw ArgumentError("phase trajectories must hold (log k, log c)");
  }
  const Frame f = make_frame(trajectories, steady);
  std::string svg;
  svg += printf_string("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                       kWidth, kHeight, kWidth, kHeight);
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg += printf_string("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n", kMargin, kHeight - kMargin,
                       kWidth - kMargin, kHeight - kMargin);
  svg += printf_string("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n", kMargin, kHeight - kMargin, kMargin,
                       kMargin);
  svg += "</g>\n";
  svg += "<g font-family=\"monospace\" font-size=\"12\">\n";
  svg += printf_string("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">log k</text>\n", kWidth / 2.0,
                       kHeight - kMargin / 3.0);
  svg += printf_string("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" transform=\"rotate(-90 %.2f %.2f)\">log c</text>\n",
                       kMargin / 3.0, kHeight / 2.0, kMargin / 3.0, kHeight / 2.0);
  svg += printf_string("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"start\">%.3g</text>\n", kMargin,
                       kHeight - kMargin + 16.0, f.x_lo);
  svg += printf_string("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">%.3g</text>\n", kWidth - kMargin,
                       kHeight - kMargin + 16.0, f.x_hi);
  svg += printf_string("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">%.3g</text>\n", kMargin - 4.0,
                       kHeight - kMargin, f.y_lo);
  svg += printf_string("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">%.3g</text>\n", kMargin - 4.0, kMargin + 4.0,
                       f.y_hi);
  svg += "</g>\n";

  svg += "<g stroke=\"gray\" stroke-dasharray=\"4 3\">\n";
  for (const auto& seg : capital_locus(p, f)) svg += polyline(seg, "locus-k");
  const ScalarFunction cdot = [&](double x) { return rhs(p, x, steady.log_c()).x2; };
  const double x_c = bisect(cdot, steady.log_k() - 50.0, steady.log_k() + 50.0, 1e-10);
  if (x_c >= f.x_lo && x_c <= f.x_hi) {
    svg += polyline({point(f, x_c, f.y_lo), point(f, x_c, f.y_hi)}, "locus-c");
  }
  svg += "</g>\n";

  svg += "<g stroke=\"steelblue\" stroke-width=\"1.5\">\n";
  for (const Trajectory& t : trajectories) {
    std::vector<std::string> pts;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!f.contains(t.value(i, 0), t.value(i, 1))) break;
      pts.push_back(point(f, t.value(i, 0), t.value(i, 1)));
    }
    if (pts.size() >= 2) svg += polyline(pts, "trajectory");
  }
  svg += "</g>\n";

  svg += printf_string("<circle class=\"steady-state\" cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\" fill=\"firebrick\"/>\n",
                       f.px(steady.log_k()), f.py(steady.log_c()), kMarkerRadius);
  svg += "</svg>\n";
  return svg;
}

std::string verify_table(const std::vector<VerifyCheck>& checks) {
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  std::string out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out += c.passed ? "PASS  " : "FAIL  ";
    out += c.name + std::string(width - c.name.size() + 2, ' ');
    out += printf_string("%-14s", format_number(c.value).c_str());
    if (!c.detail.empty()) out += "  " + c.detail;
    out += '\n';
    if (!c.passed) ++failed;
  }
  out += printf_string("%zu/%zu checks passed\n", checks.size() - failed, checks.size());
  return out;
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace econlab
