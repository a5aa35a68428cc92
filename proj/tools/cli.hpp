#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypermat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;

/// Runs one command line. JSON goes to `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypermat::cli
