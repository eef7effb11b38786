#include "econlab/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace econlab {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ParamMap parse_key_values(std::string_view text) {
  ParamMap out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ArgumentError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ArgumentError("line " + std::to_string(line_no) + ": empty key");
    if (!out.emplace(key, value).second) {
      throw ArgumentError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }
  return out;
}

ParamMap load_key_values(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading config file '" + path + "'");
  return parse_key_values(buf.str());
}

double parse_number(std::string_view text, std::string_view name) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ArgumentError("invalid number for " + std::string(name) + ": '" + std::string(text) + "'");
  }
  return v;
}

RamseyParams ramsey_params_from(const ParamMap& values, const RamseyParams& base) {
  RamseyParams p = base;
  for (const auto& [key, value] : values) {
    double* field = nullptr;
    if (key == "A") field = &p.A_tfp;
    else if (key == "alpha") field = &p.alpha;
    else if (key == "theta") field = &p.theta;
    else if (key == "delta") field = &p.delta;
    else if (key == "alpha_L") field = &p.alpha_L;
    else if (key == "alpha_T") field = &p.alpha_T;
    else if (key == "rho") field = &p.rho;
    if (field == nullptr) throw ArgumentError("unknown Ramsey parameter '" + key + "'");
    *field = parse_number(value, key);
  }
  validate(p);
  return p;
}

}  // namespace econlab
