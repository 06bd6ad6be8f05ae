#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace ohasse::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kPrecondition = 3, kInvariant = 4 };

// Subcommands: classify, scan, density, hasse, counterexample, intersect,
// integrality, runge, critical, question1. The report goes to `out` unless
// --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Maps a failure to its exit code and writes the diagnostic. Exceptions with
// no code of their own are rethrown.
int exit_code_for(const std::exception_ptr& error, std::ostream& err);

// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ohasse::cli
