#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurkit::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadInvocation = 2;

// Runs one job.  args excludes the program name.  The document goes to out,
// diagnostics to err.  SCHURKIT_MAX_DIM is read from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schurkit::cli
