#include <iostream>
#include <string>
#include <vector>

#include "vrph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return vrph::run_cli(args, std::cout, std::cerr);
}
