#pragma once

#include <iosfwd>

namespace borders::cli {

/// Exit statuses of every verb.
inline constexpr int kExitValid = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitError = 2;

/// Runs one command line (argv[0] is the program name). "-" as an input path
/// reads `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace borders::cli
