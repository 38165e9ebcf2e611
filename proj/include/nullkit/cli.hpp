#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nullkit::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kAssertionFailure = 1, kInputError = 2 };

/// Runs one `nullkit` invocation. `args` excludes the program name. Returns
/// 0 on success, 1 when a checked mathematical assertion fails, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nullkit::cli
