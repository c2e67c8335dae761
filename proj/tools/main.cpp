#include <iostream>
#include <string>
#include <vector>

#include "liebracket/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liebracket::run_cli(args, std::cout, std::cerr);
}
