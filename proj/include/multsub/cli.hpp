#ifndef MULTSUB_CLI_HPP
#define MULTSUB_CLI_HPP

#include <ostream>

namespace multsub::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // invariant failure or runtime error
inline constexpr int kExitUsage = 2;

/// Entry point behind the multsub binary; writes results to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multsub::cli

#endif  // MULTSUB_CLI_HPP
