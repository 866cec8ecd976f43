#pragma once

#include <string>
#include <vector>

namespace collabmkt::cli {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 data errors, 2 usage errors.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

} // namespace collabmkt::cli
