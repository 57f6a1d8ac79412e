#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtopo::cli {

enum ExitCode : int { ok = 0, domain_error = 1, disagreement = 2 };

/// Runs one `dtopo` invocation. `args` excludes the program name; `in` backs
/// the "-" (or omitted) input file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace dtopo::cli
