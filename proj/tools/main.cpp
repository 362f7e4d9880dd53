#include <iostream>
#include <string>
#include <vector>

#include "hbf/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hbf::cli::run_cli(args, std::cout, std::cerr);
}
