#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghz::cli {

/// Dispatches one command (argv without the program name). Results go to
/// `out` unless --out redirects them to a file; diagnostics go to `err`.
///
/// Exit codes: 0 success, 2 invalid input file (parse or density-matrix
/// validation failure, message names the failed check), 3 domain or usage
/// errors, 1 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ghz::cli
