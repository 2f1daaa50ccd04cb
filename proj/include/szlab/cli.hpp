#pragma once

#include <string>
#include <vector>

namespace szlab {

// Full command-line front end. `args` excludes the program name. Report bytes
// go to `out`, diagnostics to `err`; the return value is the process exit
// code (0 iff the command ran and every requested check passed). Never
// throws: failures become machine-readable error objects on `out` when the
// format is json, plain lines otherwise.
int run_cli(const std::vector<std::string>& args, std::string& out,
            std::string& err);

}  // namespace szlab
