#include <iostream>

#include "fsplit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fsplit::cli::run(args, std::cout, std::cerr);
}
