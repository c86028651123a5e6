#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anharmonic {

/// Command-line entry point. Exit codes: 0 success, 1 computation failure
/// (diagnostic JSON on `out`), 2 usage error (usage text on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace anharmonic
