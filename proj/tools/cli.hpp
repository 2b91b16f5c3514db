#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace speclust::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCompute = 2;

/// Runs one `speclust` invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on usage errors (message on `err`), 2 on
/// computational errors (one-line JSON object on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace speclust::cli
