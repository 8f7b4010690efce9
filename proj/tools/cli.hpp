#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aspectra::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs the command line; returns the process exit code (0 success, 1 a
/// violation was found, 2 usage, parse or feasibility error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace aspectra::cli
