#pragma once

#include <iosfwd>

namespace hyperline::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;   // NonMember, unrealizable degree sequence, no cover
inline constexpr int kBadInput = 2;   // usage errors, malformed files, precondition failures
inline constexpr int kFailure = 3;    // resource limits, internal errors

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Compact invariant suite behind the `selftest` subcommand. Prints one line
// per check; returns kOk when all pass, kFailure otherwise.
int run_selftest(std::ostream& out);

}  // namespace hyperline::cli
