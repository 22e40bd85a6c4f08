#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genflag {

/// Runs one CLI command (argv without the program name) and writes the
/// report document to `out`. Exit codes: 0 success or predicate-true,
/// 1 predicate-false or failed verification, 2 malformed input,
/// 3 internal invariant violation.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace genflag
