#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace a1deg::cli {

/// Runs one command line. Returns 0 on success, 1 when a computation is
/// refused, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace a1deg::cli
