#pragma once

// Flat key=value parameter files. Blank lines and text after '#' are ignored;
// keys and values are trimmed. Duplicate keys are an error.

#include <map>
#include <string>
#include <string_view>

#include "econlab/ramsey.hpp"

namespace econlab {

using ParamMap = std::map<std::string, std::string>;

ParamMap parse_key_values(std::string_view text);

/// Throws IoError if the file cannot be read.
ParamMap load_key_values(const std::string& path);

/// Whole-string decimal parse; throws ArgumentError naming `name`.
double parse_number(std::string_view text, std::string_view name);

/// Overrides the fields of `base` from keys A, alpha, theta, delta, alpha_L,
/// alpha_T, rho, then validates. Unknown keys are an ArgumentError.
RamseyParams ramsey_params_from(const ParamMap& values, const RamseyParams& base);

}  // namespace econlab
