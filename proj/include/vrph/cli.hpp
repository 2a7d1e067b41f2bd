#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vrph {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitInput = 1, kExitCompute = 2 };

/// Runs the `vrph` command line. args[0] is the program name. Results go to
/// `out` (unless redirected with --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// p-Wasserstein summary line, e.g. `d_Wp = 0.69029`.
std::string format_distance_line(double distance);

/// Betti numbers as `[b0,b1,...]`.
std::string format_betti(const std::vector<std::size_t>& betti);

}  // namespace vrph
