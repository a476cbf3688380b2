#include <iostream>
#include <string>
#include <vector>

#include "tubes/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tubes::run_cli(args, std::cout, std::cerr);
}
