#include <iostream>
#include <string>
#include <vector>

#include "galoislie/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return galoislie::run(args, std::cout, std::cerr);
}
