#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brace::cli {

/// Runs one command. args excludes the program name. Prints exactly one JSON
/// document to out; diagnostics go to err. Returns the process exit status:
/// 0 on success, 1 for a failed command (with an {"error": ...} record), 2 for
/// a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace brace::cli
