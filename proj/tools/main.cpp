#include <iostream>
#include <string>
#include <vector>

#include "l1kit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return l1kit::cli::run(args, std::cin, std::cout, std::cerr);
}
