#include <iostream>
#include <string>
#include <vector>

#include "ptrev/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ptrev::cli::run(args, std::cout, std::cerr);
}
