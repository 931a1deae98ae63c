#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbicurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitExceeded = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbicurve::cli
