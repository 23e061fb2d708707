#include <iostream>
#include <string>
#include <vector>

#include "dimod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dimod::run_cli(args, std::cout);
}
