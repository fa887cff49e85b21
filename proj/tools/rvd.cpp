#include <iostream>
#include <string>
#include <vector>

#include "rvd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rvd::cli::run(args, std::cin, std::cout, std::cerr);
}
