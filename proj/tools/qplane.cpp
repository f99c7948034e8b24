#include <iostream>

#include "qplane/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qplane::run(args, std::cout, std::cerr);
}
