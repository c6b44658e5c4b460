#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fourprod::cli {

/// Parses and runs one invocation. Exit codes: 0 success, 1 usage error,
/// 2 when solve finds nothing within tol (or a check suite fails).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fourprod::cli
