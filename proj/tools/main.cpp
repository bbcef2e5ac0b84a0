#include <iostream>
#include <string>
#include <vector>

#include "biell/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return biell::run(args, std::cout, std::cerr);
}
