#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loewner {

// Entry point behind the `loewner_range` binary; split out so tests can drive
// the CLI in-process. Returns the process exit code: 0 success, 1 audit or
// internal failure, 2 argument validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace loewner
