#pragma once

#include <ostream>

namespace minaff::cli {

/// Parses argv, runs one command and writes its result to out. Returns the
/// process exit code: 0 on success, 2 on a validation error (a JSON error object
/// is written to err), 1 on an internal failure.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace minaff::cli
