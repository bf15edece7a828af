#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cotan::cli {

// args excludes the program name.  Returns the process exit code: 0 on
// success, 1 for usage, parse and I/O errors, 2 when a mathematical
// precondition fails (loops, triangles, caps, forbidden cycles).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cotan::cli
