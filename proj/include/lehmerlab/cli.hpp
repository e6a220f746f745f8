#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lehmerlab::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadArguments = 2;
inline constexpr int kExitInvalidTable = 3;
inline constexpr int kExitCapExceeded = 4;
inline constexpr int kExitLehmerCandidate = 20;
inline constexpr int kExitDisagreement = 21;

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lehmerlab::cli
