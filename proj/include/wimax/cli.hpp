// Command-line front end. Kept in the library so tests can drive it
// in-process with injected streams.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wimax::cli {

// Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments or
// parameters, 3 I/O failure. Diagnostics go to err only; payload to out.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

// argv form used by main(); reads stdin/writes stdout.
int run(int argc, const char* const* argv);

}  // namespace wimax::cli
