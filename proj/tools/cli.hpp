#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cayley::cli {

// Usage errors and failed self-tests exit with kFailure.
enum ExitCode { kOk = 0, kFailure = 1, kUnknownName = 2, kEngineMismatch = 3 };

/// Runs one command line (without the program name). The heavy objects
/// (structure table, Borel engine, bundle classes) are built on first use
/// and shared by later calls in the same process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
