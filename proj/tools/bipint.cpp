#include <iostream>
#include <string>
#include <vector>

#include "bipint/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bipint::cli::run(args, std::cout, std::cerr);
}
