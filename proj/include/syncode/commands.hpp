#pragma once

#include <string>
#include <vector>

namespace syncode::cli {

/// Dispatches one subcommand (validate, codepoints, random-subsets, density,
/// bounds, simulate, plot). args excludes the program name. Returns 0 on
/// success, 1 on input/usage errors, 2 on internal errors.
int run(const std::vector<std::string>& args);

} // namespace syncode::cli
