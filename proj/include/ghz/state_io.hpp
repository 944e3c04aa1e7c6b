#pragma once

#include "ghz/complex_matrix.hpp"
#include "ghz/density_matrix.hpp"

#include <string>

namespace ghz {

/// Formats a double with 17 significant digits, enough for a bit-exact
/// round trip through decimal text. Locale-independent.
std::string format_double(double value);

/// Parses the state-file JSON schema
///   {"dim": D, "matrix": [[[re, im] x D] x D]}
/// into a raw matrix (no density-matrix validation). Rejects shape
/// mismatches and non-finite numbers with ParseError.
ComplexMatrix parse_state_json(const std::string& text);

/// Serializes a matrix into the state-file schema, row-major, 17
/// significant digits per number.
std::string state_to_json(const ComplexMatrix& m);

/// Reads and validates a state file. ParseError for missing/bad files,
/// ValidationError subtypes for matrices that fail the density checks.
DensityMatrix read_state_file(const std::string& path,
                              double tolerance = kDefaultValidationTolerance);

void write_state_file(const std::string& path, const DensityMatrix& rho);

} // namespace ghz
