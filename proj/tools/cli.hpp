#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domlab::cli {

/// Runs the domlab command line with `args` (program name excluded).
/// Positional "-" or a missing input path reads from `in`. Returns the
/// process exit code: 0 when no error report was produced (parse warnings
/// allowed unless --strict), 1 on error reports or invalid certificates,
/// and 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace domlab::cli
