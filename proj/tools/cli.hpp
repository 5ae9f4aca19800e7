#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rslab::cli {

enum ExitCode : int { ok = 0, usage_error = 2, not_member = 3, numeric_failure = 4 };

/// Runs one subcommand. `args` excludes the program name. The one-line JSON
/// summary goes to `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rslab::cli
