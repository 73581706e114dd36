#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;

/// Runs one command line (argv[0] is the program name). Results go to out,
/// diagnostics to err. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locc::cli
