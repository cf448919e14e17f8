#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsc::cli {

/// Runs one subcommand. Exit codes: 0 success, 2 validation error,
/// 3 resource cap exceeded, 64 unknown subcommand, 1 verification failure.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rsc::cli
