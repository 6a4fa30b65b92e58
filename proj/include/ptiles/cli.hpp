#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ptiles {

// Full command-line front end. `args` excludes the program name. Returns
// the process exit code: 0 success, 1 domain error, 2 usage or malformed
// input, 3 well-formed but not a tiling (verify/spectral only).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptiles
