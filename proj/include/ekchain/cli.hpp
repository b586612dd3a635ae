#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ekchain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kDefaultSweepCount = 720;
// Grid points this close to 0 or pi are left out of a sweep.
inline constexpr double kSweepExclusion = 1e-3;

// Runs one command line (args[0] is the program name). Data goes to `out`,
// one-line diagnostics to `err`. Returns 0 on success, 1 when a verification
// or containment check fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ekchain::cli
