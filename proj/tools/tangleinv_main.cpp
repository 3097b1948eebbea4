#include <iostream>
#include <string>
#include <vector>

#include "tangleinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tangleinv::run(args, std::cout, std::cerr);
}
