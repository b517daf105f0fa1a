#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biasmatch {

// Dispatches one CLI invocation (argv without the program name) writing the
// payload to `out` and diagnostics to `err`. Exit codes: 0 success,
// 1 verification failed (a checked property is false), 2 usage/input error,
// 3 budget exceeded. The BIASMATCH_BUDGET environment variable caps search
// nodes globally.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biasmatch
