#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pxp::cli {

// args[0] is the program name, as in argv.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pxp::cli
