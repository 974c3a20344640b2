#include <iostream>
#include <string>
#include <vector>

#include "tensorloc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tensorloc::run_cli(args, std::cout, std::cerr);
}
