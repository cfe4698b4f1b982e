#pragma once

// Matrix files and eigen-spec strings.
//
// Matrix JSON: {"d": n, "entries": [[re, im], ...]}, n*n entries, row-major.
// Eigen-spec: comma-separated `num/den:mult` (rational turns) or
// `rad:<float>:mult`; a missing `:mult` means 1. `i-pair` is diag(i, -i).

#include <string>

#include <json.hpp>

#include "symprod/angle.hpp"

namespace symprod {

using Json = nlohmann::ordered_json;

CMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const CMatrix& m);

CMatrix read_matrix_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// Throws InvalidInput on malformed text; validates the result.
EigenSpec parse_eigen_spec(const std::string& text);
Angle parse_angle(const std::string& text);

Json complex_to_json(Complex z);

}  // namespace symprod
