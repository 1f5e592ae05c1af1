#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ped::cli {

enum ExitCode : int { Ok = 0, Falsified = 1, BadInput = 2 };

/// Runs the command line (args[0] is the program name). Output is
/// byte-deterministic for a given argument list.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Worker threads for verifiers: hardware concurrency, capped by the
/// PEDESTAL_THREADS environment variable when it is set.
int thread_budget();

} // namespace ped::cli
