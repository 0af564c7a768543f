#include <iostream>
#include <string>
#include <vector>

#include "qlogic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qlogic::run(args, std::cout, std::cerr);
}
