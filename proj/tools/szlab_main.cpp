#include <cstdio>
#include <string>
#include <vector>

#include "szlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string out, err;
  int code = szlab::run_cli(args, out, err);
  if (!out.empty()) std::fputs(out.c_str(), stdout);
  if (!err.empty()) std::fputs(err.c_str(), stderr);
  return code;
}
