#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zmn {

/// Subcommands: count, oracle, summatory, series-check, coeffs, constants, scan.
/// Exit codes: 0 success, 1 usage or domain error, 2 computation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zmn
