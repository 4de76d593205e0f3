#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dickson {

/// CLI entry point: arguments in natural order, without the program name.
/// Writes reports to out and diagnostics to err. Returns the exit status:
/// 0 success, 1 contract or overflow errors, 2 usage or syntax errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dickson
