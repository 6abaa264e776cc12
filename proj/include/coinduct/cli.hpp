#pragma once

#include <iosfwd>

namespace coinduct::cli {

// Exit codes are a stable contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSemantic = 1;   // underivable, invalid certificate, failed law, disagreement
inline constexpr int kExitMalformed = 2;  // unreadable or ill-formed input, bad flags
inline constexpr int kExitBound = 3;      // a size bound was exceeded

/// Entry point of the `coinduct` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coinduct::cli
