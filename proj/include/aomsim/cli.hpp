#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aomsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitAuditFailed = 3;

// args[0] is the program name. Reports go to `out`, diagnostics to `err`
// (one "error: <kind>: <detail>" line per failure).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aomsim::cli
