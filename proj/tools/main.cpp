#include <iostream>
#include <string>
#include <vector>

#include "clilib/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return npcli::run(args, std::cout, std::cerr);
}
