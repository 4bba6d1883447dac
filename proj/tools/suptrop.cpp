#include <iostream>
#include <string>
#include <vector>

#include "suptrop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return suptrop::cli::main(args, std::cout, std::cerr);
}
