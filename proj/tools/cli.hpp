#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revcount::cli {

/// Runs one `rnl` invocation. `args` excludes the program name.
/// Returns 0 on success, 1 when a verification check failed, 2 on errors.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err, bool color = false);

} // namespace revcount::cli
