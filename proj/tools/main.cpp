#include <iostream>
#include <string>
#include <vector>

#include "cactus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cactus::runCommand(args, std::cout, std::cerr);
}
